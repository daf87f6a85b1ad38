//! Acceptance suite: one line per criterion, all checks exact.
//!
//! Runs without the libtest harness; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hopfkit::analysis::{characters, classification_report, s_matrix, ItemStatus};
use hopfkit::constructions::{
    a_c2, a_c2_expected_q, a_c2_r_family, bicharacter_r_matrix, bicrossed_product, cyclic_bicharacter, double_legs,
    drinfeld_double, dual_group_algebra, enumerate_qt_group, group_algebra, FiniteGroup, MatchedPair,
};
use hopfkit::hopf_core::{verify_hopf_axioms, HopfMorphism};
use hopfkit::io::AlgebraFile;
use hopfkit::qt_structure::verify_qt;
use hopfkit::quotients::{
    canonical_quotient, central_gl_report, is_normal_surjection, quotient_by, quotient_by_ideal, takeuchi,
    TakeuchiInput,
};
use hopfkit::transmutation::BraidedStructures;
use hopfkit::{rat, Cyclo, Hopf, Matrix, Qt, Rational, RationalQt, Scalar, Subspace, Tensor};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

struct Example {
    name: String,
    qt: Qt,
}

fn z7_z3_bicrossed() -> Hopf {
    let (z7, z3) = (FiniteGroup::cyclic(7), FiniteGroup::cyclic(3));
    let aut: Vec<Vec<usize>> = (0..3).map(|x| (0..7).map(|s| s * [1, 2, 4][x] % 7).collect()).collect();
    let mp = MatchedPair::from_right_action(z7, z3, &aut).unwrap();
    bicrossed_product::<Cyclo>(&mp).unwrap()
}

/// Every quasitriangular example the criteria range over.
fn qt_examples() -> Vec<Example> {
    let mut out = Vec::new();
    let mut push = |name: String, qt: Qt| out.push(Example { name, qt });
    for (name, g) in [("Z2", FiniteGroup::cyclic(2)), ("Z3", FiniteGroup::cyclic(3)), ("S3", FiniteGroup::s3())] {
        push(format!("D(k{name})"), drinfeld_double(&group_algebra::<Cyclo>(&g)).unwrap());
    }
    for g in [FiniteGroup::cyclic(3), FiniteGroup::s3()] {
        let kg = group_algebra::<Cyclo>(&g);
        for (i, row) in enumerate_qt_group::<Cyclo>(&g).unwrap().into_iter().enumerate() {
            push(format!("k{} R#{i}", g.name), Qt::new(kg.clone(), row.r).unwrap());
        }
    }
    let g21 = group_algebra::<Cyclo>(&FiniteGroup::z7_z3());
    push("k(Z7xZ3) R = 1 (x) 1".into(), Qt::new(g21.clone(), g21.tensor_one()).unwrap());
    let z15 = FiniteGroup::cyclic(15);
    let r = bicharacter_r_matrix(&z15, &cyclic_bicharacter(15, 1)).unwrap();
    push("kZ15 nondegenerate".into(), Qt::new(group_algebra(&z15), r).unwrap());
    let ac2 = a_c2::<Cyclo>();
    for p in [[1, 2, 0, -1], [0, 1, 0, 0], [1, 1, 1, 0]] {
        let r = a_c2_r_family(&ac2, c(p[0]), c(p[1]), c(p[2]), c(p[3]));
        push(format!("A_C2 R{p:?}"), Qt::new(ac2.clone(), r).unwrap());
    }
    out
}

fn criterion_1() -> Outcome {
    let mut algebras: Vec<(String, Hopf)> = Vec::new();
    for n in 1..=15 {
        algebras.push((format!("kZ{n}"), group_algebra(&FiniteGroup::cyclic(n))));
    }
    algebras.push(("kS3".into(), group_algebra(&FiniteGroup::s3())));
    algebras.push(("k^S3".into(), dual_group_algebra(&FiniteGroup::s3())));
    algebras.push(("A_C2".into(), a_c2()));
    for (name, g) in [("Z2", FiniteGroup::cyclic(2)), ("Z3", FiniteGroup::cyclic(3)), ("S3", FiniteGroup::s3())] {
        algebras.push((format!("D(k{name})"), drinfeld_double(&group_algebra::<Cyclo>(&g)).unwrap().hopf().clone()));
    }
    algebras.push(("Z7 x| Z3 bicrossed".into(), z7_z3_bicrossed()));
    for (name, h) in &algebras {
        let rep = verify_hopf_axioms(h);
        ensure(rep.passed(), || format!("{name}: {}", rep.first_failure().unwrap()))?;
    }

    // single-entry mutations of A_C2: 14 changed entries, 6 new ones
    let base = AlgebraFile::from_hopf(&a_c2::<Rational>(), None, None);
    let mut mutants: Vec<(String, AlgebraFile)> = Vec::new();
    let bump = |s: &str| (Rational::parse_scalar(s).unwrap() + Rational::from_int(1)).to_text();
    for k in 0..4 {
        let mut f = base.clone();
        let i = k * f.mult.len() / 4;
        f.mult[i].3 = bump(&f.mult[i].3);
        mutants.push((format!("mult entry {i}"), f));
        let mut f = base.clone();
        let i = k * f.comult.len() / 4;
        f.comult[i].3 = bump(&f.comult[i].3);
        mutants.push((format!("comult entry {i}"), f));
        let mut f = base.clone();
        let i = k * f.antipode.len() / 4;
        f.antipode[i].2 = bump(&f.antipode[i].2);
        mutants.push((format!("antipode entry {i}"), f));
    }
    let mut f = base.clone();
    f.unit[0].1 = bump(&f.unit[0].1);
    mutants.push(("unit".into(), f));
    let mut f = base.clone();
    f.counit[0].1 = bump(&f.counit[0].1);
    mutants.push(("counit".into(), f));
    for (i, j, k) in [(2, 2, 0), (2, 3, 1), (1, 1, 2)] {
        let mut f = base.clone();
        f.mult.push((i, j, k, "1".into()));
        mutants.push((format!("new mult entry {i} {j} {k}"), f));
    }
    let mut f = base.clone();
    f.comult.push((2, 2, 2, "1".into()));
    mutants.push(("new comult entry".into(), f));
    let mut f = base.clone();
    f.counit.push((2, "1".into()));
    mutants.push(("new counit entry".into(), f));
    let mut f = base.clone();
    f.antipode.push((2, 1, "1".into()));
    mutants.push(("new antipode entry".into(), f));
    ensure(mutants.len() == 20, || format!("{} mutants", mutants.len()))?;
    for (name, f) in &mutants {
        let h = f.to_algebra::<Rational>().map_err(|e| format!("mutant {name} did not load: {e}"))?.hopf;
        ensure(!verify_hopf_axioms(&h).passed(), || format!("mutant {name} passes every axiom"))?;
    }
    Ok(format!("{} algebras pass, 20 of 20 mutants fail", algebras.len()))
}

fn criterion_2() -> Outcome {
    let mut detail = Vec::new();
    for (g, expected) in [(FiniteGroup::s3(), 3), (FiniteGroup::cyclic(3), 3), (FiniteGroup::z7_z3(), 1)] {
        let rows = enumerate_qt_group::<Cyclo>(&g).map_err(|e| e.to_string())?;
        ensure(rows.len() == expected, || format!("{}: {} structures, expected {expected}", g.name, rows.len()))?;
        let kg = group_algebra::<Cyclo>(&g);
        for (i, row) in rows.iter().enumerate() {
            let rep = verify_qt(&kg, &row.r).map_err(|e| format!("{} row {i}: {e}", g.name))?;
            ensure(rep.passed() && row.qt_verified, || format!("{} row {i}: {}", g.name, rep))?;
        }
        if expected == 1 {
            ensure(rows[0].r == kg.tensor_one(), || format!("{}: the only R is not 1 (x) 1", g.name))?;
        }
        detail.push(format!("{} {}", g.name, rows.len()));
    }
    Ok(detail.join(", "))
}

fn criterion_3() -> Outcome {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::s3()] {
        let a = group_algebra::<Cyclo>(&g);
        let n = a.dim();
        let qt = drinfeld_double(&a).map_err(|e| e.to_string())?;
        let rep = verify_qt(qt.hopf(), qt.r()).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("D(k{}): {rep}", g.name))?;
        ensure(qt.phi().rank() == n * n, || format!("D(k{}): rank Phi_R = {}", g.name, qt.phi().rank()))?;
        let (dual_leg, a_leg) = double_legs(&a);
        ensure(qt.h_plus() == &a_leg, || format!("D(k{}): H_+ is not the A leg", g.name))?;
        ensure(qt.h_minus() == &dual_leg, || format!("D(k{}): H_- is not the A* leg", g.name))?;
        let cq = canonical_quotient(&qt, &Subspace::full(n * n)).map_err(|e| e.to_string())?;
        ensure(cq.quotient().dim() == 1, || format!("D(k{}): quotient of dim {}", g.name, cq.quotient().dim()))?;
    }
    Ok("D(kZ2), D(kZ3), D(kS3) factorizable with the expected legs, quotient k".into())
}

fn criterion_4() -> Outcome {
    let h = a_c2::<Rational>();
    let e = |i: usize| h.basis_vec(i);
    let image = Subspace::span(8, [0, 4, 5, 6].map(e));
    let vals = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(2, 3), rat(-3, 1)];
    let mut points = 0;
    let mut triangular = 0;
    for (k, b) in vals.iter().enumerate() {
        for (l, cc) in vals.iter().enumerate() {
            let a = vals[(k + 2 * l) % vals.len()].clone();
            let d = vals[(3 * k + l + 1) % vals.len()].clone();
            let r = a_c2_r_family(&h, a, b.clone(), cc.clone(), d);
            let at = || format!("b = {b}, c = {cc}");
            let rep = verify_qt(&h, &r).map_err(|e| format!("{}: {e}", at()))?;
            ensure(rep.passed(), || format!("{}: {rep}", at()))?;
            let qt = RationalQt::new(h.clone(), r).map_err(|e| e.to_string())?;
            ensure(*qt.q() == a_c2_expected_q(&h, b.clone(), cc.clone()), || format!("{}: Q formula", at()))?;
            if b != cc {
                ensure(qt.phi_image() == &image, || format!("{}: image of Phi_R", at()))?;
                let p = h.predicates(qt.phi_image());
                ensure(p.subalgebra && p.left_coideal && p.ad_stable && !p.subcoalgebra, || {
                    format!("{}: predicates {p:?}", at())
                })?;
            } else {
                ensure(qt.is_triangular(), || format!("{}: not triangular", at()))?;
                triangular += 1;
            }
            points += 1;
        }
    }
    Ok(format!("{points} rational points, {triangular} with b = c"))
}

fn criterion_5(examples: &[Example]) -> Outcome {
    for ex in examples {
        let (qt, h) = (&ex.qt, ex.qt.hopf());
        let n = h.dim();
        let cq = canonical_quotient(qt, &Subspace::full(n)).map_err(|e| format!("{}: {e}", ex.name))?;
        ensure(cq.report.passed(), || format!("{}: {}", ex.name, cq.report.first_failure().unwrap()))?;
        let pres = &cq.presentation;
        ensure(pres.left_coinvariants.space == *qt.phi_image(), || format!("{}: Phi_R(H*) != H^co pi", ex.name))?;
        let rphi = qt.rphi();
        let rphi_img = Subspace::span(n, (0..n).map(|j| rphi.col(j)));
        ensure(pres.right_coinvariants.space == rphi_img, || format!("{}: rPhi(H*) != ^co pi H", ex.name))?;
        let pi = &cq.projection().matrix;
        let (one, bar_one) = (h.one(), cq.quotient().one());
        let left = Tensor(pi.mul(&qt.q().0));
        let right = Tensor(qt.q().0.mul(&pi.transpose()));
        ensure(left == Tensor::simple(&bar_one, &one), || format!("{}: (pi (x) id)(Q)", ex.name))?;
        ensure(right == Tensor::simple(&one, &bar_one), || format!("{}: (id (x) pi)(Q)", ex.name))?;
        ensure(cq.r_bar.is_triangular(), || format!("{}: quotient not triangular", ex.name))?;
        ensure(n == cq.k_c.dim() * cq.quotient().dim(), || format!("{}: dim H != dim K dim H_bar", ex.name))?;
    }
    Ok(format!("{} examples", examples.len()))
}

fn round_trip(h: &Hopf, input: TakeuchiInput<Cyclo>) -> Result<(), String> {
    let there = takeuchi(h, &input).map_err(|e| e.to_string())?;
    let back = takeuchi(h, &there).map_err(|e| e.to_string())?;
    let same = match (&input, &back) {
        (TakeuchiInput::HopfIdeal(a), TakeuchiInput::HopfIdeal(b)) => a == b,
        (TakeuchiInput::CoidealSubalgebra(a), TakeuchiInput::CoidealSubalgebra(b)) => a == b,
        _ => false,
    };
    ensure(same, || "round trip changed the input".into())
}

fn criterion_6(examples: &[Example]) -> Outcome {
    let mut cases: Vec<(String, Hopf, TakeuchiInput<Cyclo>)> = Vec::new();
    for ex in examples {
        let h = ex.qt.hopf();
        let n = h.dim();
        let cq = canonical_quotient(&ex.qt, &Subspace::full(n)).map_err(|e| e.to_string())?;
        cases.push((format!("{} K_C", ex.name), h.clone(), TakeuchiInput::CoidealSubalgebra(cq.k_c.clone())));
        let ker = cq.projection().kernel();
        cases.push((format!("{} ker pi", ex.name), h.clone(), TakeuchiInput::HopfIdeal(ker)));
    }
    let mut extra: Vec<(String, Hopf)> = Vec::new();
    extra.push(("kS3".into(), group_algebra(&FiniteGroup::s3())));
    extra.push(("k(Z7xZ3)".into(), group_algebra(&FiniteGroup::z7_z3())));
    extra.push(("A_C2".into(), a_c2()));
    for (name, h) in extra {
        let n = h.dim();
        let plus = Subspace::span(n, hopfkit::quotients::augmentation(&h, &Subspace::full(n)).basis().to_vec());
        cases.push((format!("{name} H^+"), h.clone(), TakeuchiInput::HopfIdeal(plus)));
        cases.push((format!("{name} 0"), h.clone(), TakeuchiInput::HopfIdeal(Subspace::zero(n))));
        cases.push((format!("{name} k"), h.clone(), TakeuchiInput::CoidealSubalgebra(Subspace::span(n, [h.one()]))));
        cases.push((format!("{name} H"), h.clone(), TakeuchiInput::CoidealSubalgebra(Subspace::full(n))));
    }
    for (g, name) in [(FiniteGroup::s3(), "kS3"), (FiniteGroup::z7_z3(), "k(Z7xZ3)")] {
        let kg = group_algebra::<Cyclo>(&g);
        for sub in g.subgroups() {
            if g.is_normal(&sub) {
                let l = Subspace::span(g.order(), sub.iter().map(|&i| kg.basis_vec(i)));
                cases.push((format!("{name} k{sub:?}"), kg.clone(), TakeuchiInput::CoidealSubalgebra(l)));
            }
        }
    }
    // A_C2 modulo (x, y): a Hopf ideal whose coinvariants are not a Hopf subalgebra
    let ac2 = a_c2::<Cyclo>();
    let xy_ideal = Subspace::span(8, [2, 3, 4, 5, 6, 7].map(|i| ac2.basis_vec(i)));
    cases.push(("A_C2 (x, y)".into(), ac2, TakeuchiInput::HopfIdeal(xy_ideal)));
    for (name, h, input) in cases.iter() {
        round_trip(h, input.clone()).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} round trips", cases.len()))
}

/// `f + a -> f(1) a` from `D(A)` onto `A`.
fn double_onto_group_leg(a: &Hopf) -> HopfMorphism<Cyclo> {
    let n = a.dim();
    let one = a.one();
    let mut m = Matrix::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            m.set(j, i * n + j, one[i].clone());
        }
    }
    HopfMorphism::new(m)
}

/// `f + a -> eps(a) f` from `D(A)` onto `A*`; a Hopf map when `A` is commutative.
fn double_onto_dual_leg(a: &Hopf) -> HopfMorphism<Cyclo> {
    let n = a.dim();
    let eps = a.counit_vec();
    let mut m = Matrix::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, i * n + j, eps[j].clone());
        }
    }
    HopfMorphism::new(m)
}

fn criterion_7(examples: &[Example]) -> Outcome {
    let mut pairs: Vec<(String, &Qt, HopfMorphism<Cyclo>, Hopf)> = Vec::new();
    for ex in examples {
        let n = ex.qt.hopf().dim();
        let cq = canonical_quotient(&ex.qt, &Subspace::full(n)).map_err(|e| e.to_string())?;
        pairs.push((format!("{} canonical", ex.name), &ex.qt, cq.projection().clone(), cq.quotient().clone()));
        let name = &ex.name;
        if let Some(g) = [("D(kZ2)", 2usize), ("D(kZ3)", 3), ("D(kS3)", 6)].iter().find(|(s, _)| s == name) {
            let grp = if g.1 == 6 { FiniteGroup::s3() } else { FiniteGroup::cyclic(g.1) };
            let a = group_algebra::<Cyclo>(&grp);
            pairs.push((format!("{name} onto A"), &ex.qt, double_onto_group_leg(&a), a.clone()));
            if a.is_commutative() {
                let dual = a.dual();
                pairs.push((format!("{name} onto A*"), &ex.qt, double_onto_dual_leg(&a), dual));
            }
        }
        if name.starts_with("kS3") {
            let h = ex.qt.hopf();
            let a3 = Subspace::span(6, [0, 1, 2].map(|i| h.basis_vec(i)));
            let qp = quotient_by(h, &a3).map_err(|e| e.to_string())?;
            pairs.push((format!("{name} onto kZ2"), &ex.qt, qp.projection.clone(), qp.quotient.clone()));
        }
        if name.starts_with("A_C2") {
            let h = ex.qt.hopf();
            let ideal = Subspace::span(8, [2, 3, 4, 5, 6, 7].map(|i| h.basis_vec(i)));
            let qp = quotient_by_ideal(h, &ideal).map_err(|e| e.to_string())?;
            pairs.push((format!("{name} onto kZ2"), &ex.qt, qp.projection.clone(), qp.quotient.clone()));
        }
    }
    let (mut normal, mut not_normal) = (0, 0);
    for (name, qt, pi, target) in &pairs {
        let h = qt.hopf();
        let n = h.dim();
        let rep = pi.verify(h, target);
        ensure(rep.passed(), || format!("{name}: not a Hopf map: {}", rep.first_failure().unwrap()))?;
        let ev = is_normal_surjection(h, pi).map_err(|e| format!("{name}: {e}"))?;
        let (left, _) = hopfkit::quotients::coinvariants(h, pi).map_err(|e| e.to_string())?;
        let pt = pi.matrix.transpose();
        let f_r21 = qt.f_r21();
        let image = Subspace::span(n, (0..pt.cols()).map(|j| f_r21.mul_vec(&pt.col(j))));
        let crit = h.centralizer(&left).contains_all(&image);
        ensure(crit == ev.normal, || format!("{name}: normal {} but criterion {crit}", ev.normal))?;
        if ev.normal {
            normal += 1;
        } else {
            not_normal += 1;
        }
    }
    ensure(pairs.len() >= 8 && normal > 0 && not_normal > 0, || format!("{normal} normal, {not_normal} not"))?;
    Ok(format!("{} pairs, {normal} normal, {not_normal} not normal", pairs.len()))
}

fn criterion_8(examples: &[Example]) -> Outcome {
    for ex in examples {
        let n = ex.qt.hopf().dim();
        let cq = canonical_quotient(&ex.qt, &Subspace::full(n)).map_err(|e| e.to_string())?;
        let rep = central_gl_report(&ex.qt, &cq).map_err(|e| format!("{}: {e}", ex.name))?;
        ensure(rep.passed(), || format!("{}: {}", ex.name, rep.first_failure().unwrap()))?;
    }
    Ok(format!("{} examples", examples.len()))
}

fn criterion_9(examples: &[Example]) -> Outcome {
    for ex in examples {
        let bs = BraidedStructures::new(&ex.qt);
        for rep in [bs.verify_structures(), bs.verify_braided_morphism(), bs.verify_coproduct_relations()] {
            ensure(rep.passed(), || format!("{}: {}", ex.name, rep.first_failure().unwrap()))?;
        }
        let s = ex.qt.hopf().antipode();
        ensure(s.mul(&ex.qt.phi()).mul(&s.transpose()) == ex.qt.rphi(), || format!("{}: rPhi != S Phi S", ex.name))?;
    }
    Ok(format!("{} examples", examples.len()))
}

fn criterion_10(examples: &[Example]) -> Outcome {
    let z15 = examples.iter().find(|e| e.name == "kZ15 nondegenerate").unwrap();
    let rep = classification_report(&z15.qt).map_err(|e| e.to_string())?;
    ensure(rep.applicable, || "kZ15: hypotheses fail".into())?;
    for it in rep.hypotheses.iter().chain(&rep.items) {
        ensure(it.status == ItemStatus::Pass, || format!("kZ15: {} ({})", it.name, it.evidence))?;
    }
    ensure(rep.item("<,><,>^op is nondegenerate").is_some(), || "kZ15: symmetrized form not checked".into())?;
    let g21 = examples.iter().find(|e| e.name.starts_with("k(Z7xZ3)")).unwrap();
    let rep = classification_report(&g21.qt).map_err(|e| e.to_string())?;
    ensure(rep.branch == "triangular, R = 1 (x) 1" && rep.passed(), || format!("k(Z7xZ3): branch {}", rep.branch))?;
    let mut semisimple = 0;
    for ex in examples {
        let h = ex.qt.hopf();
        if !h.is_semisimple() {
            continue;
        }
        let chars = characters(h).map_err(|e| format!("{}: {e}", ex.name))?;
        let s = s_matrix(&ex.qt, &chars);
        ensure(s.nondegenerate == ex.qt.is_factorizable(), || {
            format!("{}: S nondegenerate {}, factorizable {}", ex.name, s.nondegenerate, ex.qt.is_factorizable())
        })?;
        semisimple += 1;
    }
    Ok(format!("kZ15 passes, k(Z7xZ3) triangular, S-matrix agrees on {semisimple} semisimple examples"))
}

fn main() {
    let start = Instant::now();
    let examples = qt_examples();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("axiom gauntlet", Box::new(criterion_1)),
        ("QT census", Box::new(criterion_2)),
        ("doubles are factorizable", Box::new(criterion_3)),
        ("A_C2 family", Box::new(criterion_4)),
        ("canonical quotient", Box::new(|| criterion_5(&examples))),
        ("Takeuchi round trips", Box::new(|| criterion_6(&examples))),
        ("centralizer criterion for normality", Box::new(|| criterion_7(&examples))),
        ("central group-likes", Box::new(|| criterion_8(&examples))),
        ("transmutation identities", Box::new(|| criterion_9(&examples))),
        ("classification pipeline", Box::new(|| criterion_10(&examples))),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass ({:.1}s)", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
