//! The quotient `H -> H/H K_C^+` with `K_C = k[Phi_R(C)]` for a subcoalgebra
//! `C` of `H*`.

use serde::Serialize;

use super::{augmentation, coideal_subalgebra_failure, quotient_by, QuotientPresentation};
use crate::error::{Error, Result};
use crate::exact_math::matrix::{dot, scale_vec};
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::{group_likes, integrals, AxiomReport, FiniteDimHopf, HopfMorphism};
use crate::qt_structure::QtPair;

#[derive(Clone, Debug)]
pub struct CanonicalQuotient<F> {
    /// The subcoalgebra `C` of `H*`, as coefficient vectors on the dual basis.
    pub c: Subspace<F>,
    /// `Phi_R(C)`
    pub phi_c: Subspace<F>,
    /// `K_C = k[Phi_R(C)]`
    pub k_c: Subspace<F>,
    pub presentation: QuotientPresentation<F>,
    pub r_bar: QtPair<F>,
    pub report: AxiomReport,
}

impl<F: Scalar> CanonicalQuotient<F> {
    pub fn projection(&self) -> &HopfMorphism<F> {
        &self.presentation.projection
    }

    pub fn quotient(&self) -> &FiniteDimHopf<F> {
        &self.presentation.quotient
    }

    pub fn is_full(&self) -> bool {
        self.c.dim() == self.c.ambient()
    }
}

fn check(rep: &mut AxiomReport, name: &str, ok: bool, witness: impl FnOnce() -> String) {
    rep.push(name, (!ok).then(witness));
}

/// `(p (x) t)(Q) = p(1) t(1)` for every `p` in the basis of `C`; returns the
/// first failing index.
fn c_radical_witness<F: Scalar>(qt: &QtPair<F>, c: &Subspace<F>, t: &HopfMorphism<F>) -> Option<usize> {
    let h = qt.hopf();
    let phi = qt.phi();
    let one = h.one();
    let t_one = t.apply(&one);
    c.basis().iter().position(|p| {
        let lhs = t.apply(&phi.mul_vec(p));
        lhs != scale_vec(&dot(p, &one), &t_one)
    })
}

/// Builds `H_C`, `R_bar` and checks the properties that the theory predicts.
pub fn canonical_quotient<F: Scalar>(qt: &QtPair<F>, c: &Subspace<F>) -> Result<CanonicalQuotient<F>> {
    let h = qt.hopf();
    let n = h.dim();
    if c.ambient() != n {
        return Err(Error::Dimension("C must live in H*".into()));
    }
    let dual = h.dual();
    if !(dual.is_left_coideal(c) && dual.is_right_coideal(c)) {
        return Err(Error::Invalid("C is not a subcoalgebra of H*".into()));
    }
    let phi = qt.phi();
    let phi_c = c.map(n, |p| phi.mul_vec(p));
    let mut rep = AxiomReport { checks: Vec::new() };
    check(&mut rep, "Phi_R(C) is a left coideal", h.is_left_coideal(&phi_c), || "Phi_R(C)".into());
    check(&mut rep, "Phi_R(C) is stable under the left adjoint action", h.is_ad_stable(&phi_c), || "Phi_R(C)".into());
    let k_c = h.algebra_closure(phi_c.basis());
    if let Some(p) = coideal_subalgebra_failure(h, &k_c) {
        return Err(Error::Axiom(format!("k[Phi_R(C)] fails {p}")));
    }
    let pres = quotient_by(h, &k_c)?.with_r(qt.r());
    let pi = pres.projection.clone();
    let r_bar = qt.push_r(&pi, pres.quotient.clone())?;

    check(&mut rep, "K_C = H^{co pi_C}", pres.left_coinvariants.space == k_c, || {
        format!("dim K_C = {}, dim coinvariants = {}", k_c.dim(), pres.left_coinvariants.space.dim())
    });
    let s_inv_dual = h.antipode_inv().ok_or_else(|| Error::NotInvertible("antipode".into()))?.transpose();
    let rphi = qt.rphi();
    let r_side = h.algebra_closure(c.map(n, |p| rphi.mul_vec(&s_inv_dual.mul_vec(p))).basis());
    check(&mut rep, "k[rPhi(S^-1 C)] = ^{co pi_C}H", pres.right_coinvariants.space == r_side, || {
        format!("dims {} and {}", r_side.dim(), pres.right_coinvariants.space.dim())
    });
    let wit = c_radical_witness(qt, c, &pi);
    check(&mut rep, "(p (x) pi_C)(Q) = p(1) 1 for p in C", wit.is_none(), || {
        format!("p = basis vector {}", wit.unwrap())
    });
    let m = pres.quotient.dim();
    check(&mut rep, "dim H = dim K_C * dim H_C", n == k_c.dim() * m, || format!("{n} != {} * {m}", k_c.dim()));
    check(&mut rep, "K_C is inside H_R", qt.h_r().contains_all(&k_c), || "K_C".into());
    let hr = qt.h_r().dim();
    let index_divides = n % hr == 0 && m % (n / hr) == 0;
    check(&mut rep, "[H:H_R] divides dim H_C", index_divides, || format!("[H:H_R] = {n}/{hr}, dim H_C = {m}"));

    if c.dim() == n {
        check(&mut rep, "H_C is triangular", r_bar.is_triangular(), || "Q_bar != 1 (x) 1".into());
        check(&mut rep, "Phi_R(H*) = H^{co pi}", phi_c == pres.left_coinvariants.space, || "Phi_R(H*)".into());
        let rphi_all = Subspace::span(n, (0..n).map(|j| rphi.col(j)));
        check(&mut rep, "rPhi(H*) = ^{co pi}H", rphi_all == pres.right_coinvariants.space, || "rPhi(H*)".into());
        let id = Matrix::identity(n);
        let one_one = Tensor::simple(&pres.quotient.one(), &h.one());
        let left = qt.q().apply(&pi.matrix, &id);
        check(&mut rep, "(pi (x) id)(Q) = 1 (x) 1", left == one_one, || "Q".into());
        let right = qt.q().apply(&id, &pi.matrix);
        check(&mut rep, "(id (x) pi)(Q) = 1 (x) 1", right == one_one.flip(), || "Q".into());
        check(&mut rep, "H_bar minimal implies H minimal", !r_bar.is_minimal() || qt.is_minimal(), || {
            "H_bar minimal but H is not".into()
        });
    }
    Ok(CanonicalQuotient { c: c.clone(), phi_c, k_c, presentation: pres, r_bar, report: rep })
}

/// `g` with `g p1 = p2`, when `ker p1` is inside `ker p2`.
pub fn factor_through<F: Scalar>(p1: &HopfMorphism<F>, p2: &HopfMorphism<F>) -> Option<HopfMorphism<F>> {
    if p1.source_dim() != p2.source_dim() || !p2.kernel().contains_all(&p1.kernel()) {
        return None;
    }
    let m1 = p1.target_dim();
    // right inverse of p1 column by column
    let mut sect = Matrix::zeros(p1.source_dim(), m1);
    for a in 0..m1 {
        let mut e = vec![F::zero(); m1];
        e[a] = F::one();
        let x = p1.matrix.solve(&e)?;
        for (i, v) in x.into_iter().enumerate() {
            sect.set(i, a, v);
        }
    }
    let g = p2.matrix.mul(&sect);
    (g.mul(&p1.matrix) == p2.matrix).then(|| HopfMorphism::new(g))
}

/// Whether a candidate quotient `t` with `(p (x) t)(Q) = p(1)1` on `C`
/// factors through `pi_C`.
pub fn maximality_check<F: Scalar>(qt: &QtPair<F>, cq: &CanonicalQuotient<F>, t: &HopfMorphism<F>) -> Result<bool> {
    if !t.is_surjective() {
        return Err(Error::Invalid("candidate is not surjective".into()));
    }
    if let Some(i) = c_radical_witness(qt, &cq.c, t) {
        return Err(Error::Invalid(format!("(p (x) t)(Q) != p(1) 1 for p = basis vector {i} of C")));
    }
    Ok(t.kernel().contains_all(&cq.projection().kernel()))
}

/// The surjections `H -> H_C -> H_bar`, each verified as a Hopf map.
pub fn quotient_sequence_report<F: Scalar>(qt: &QtPair<F>, c: &Subspace<F>) -> Result<AxiomReport> {
    let n = qt.hopf().dim();
    let small = canonical_quotient(qt, c)?;
    let full = canonical_quotient(qt, &Subspace::full(n))?;
    let mut rep = AxiomReport { checks: Vec::new() };
    match factor_through(small.projection(), full.projection()) {
        Some(g) => {
            let v = g.verify(small.quotient(), full.quotient());
            rep.push("H_C -> H_bar is a Hopf map", v.first_failure());
            rep.push("H_C -> H_bar is surjective", (!g.is_surjective()).then(|| "image".to_string()));
        }
        None => rep.push("ker pi_C inside ker pi", Some("no factorization".into())),
    }
    Ok(rep)
}

/// Group-likes of `H*`, their images and the modular function, measured
/// against `C = H*`.
pub fn central_gl_report<F: Scalar>(qt: &QtPair<F>, cq: &CanonicalQuotient<F>) -> Result<AxiomReport> {
    let h = qt.hopf();
    let n = h.dim();
    let dual = h.dual();
    let phi = qt.phi();
    let bar_dual = cq.presentation.dual_inclusion();
    let plus = augmentation(&dual, &bar_dual);
    let mut prods = Vec::new();
    for a in plus.basis() {
        for k in 0..n {
            prods.push(dual.mul(a, &dual.basis_vec(k)));
        }
    }
    let lhs = Subspace::span(n, phi.kernel());
    let rhs = Subspace::span(n, prods);
    let mut rep = AxiomReport { checks: Vec::new() };
    check(&mut rep, "ker Phi_R = (H_bar*)^+ H*", lhs == rhs, || format!("dims {} and {}", lhs.dim(), rhs.dim()));

    let gl = group_likes(&dual)?;
    let center = h.center();
    let images: Vec<Vec<F>> = gl.elements.iter().map(|g| phi.mul_vec(g)).collect();
    let bad = images.iter().position(|a| h.comul(a) != Tensor::simple(a, a) || !center.contains(a));
    check(&mut rep, "Phi_R(G(H*)) inside G(H) cap Z(H)", bad.is_none(), || format!("group-like {}", bad.unwrap()));
    let mut inj = None;
    'outer: for a in 0..gl.order() {
        for b in 0..gl.order() {
            // g_a g_b^-1 lies in H_bar* exactly when the images agree
            let quot = dual.mul(&gl.elements[a], &dual.s(&gl.elements[b]));
            if (images[a] == images[b]) != bar_dual.contains(&quot) {
                inj = Some((a, b));
                break 'outer;
            }
        }
    }
    check(&mut rep, "G(H*)/G(H_bar*) -> G(H) is injective", inj.is_none(), || format!("{:?}", inj.unwrap()));
    let alpha = integrals(h)?.modular;
    check(&mut rep, "modular function lies in H_bar*", bar_dual.contains(&alpha), || "alpha".into());
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexReport {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_intersection: usize,
    pub checks: AxiomReport,
}

/// `B = (H_bar_A)*` for a Hopf subalgebra `A` of `H*`.
pub fn index_report<F: Scalar>(qt: &QtPair<F>, a: &Subspace<F>) -> Result<IndexReport> {
    let h = qt.hopf();
    let n = h.dim();
    let dual = h.dual();
    if !dual.predicates(a).hopf_subalgebra {
        return Err(Error::Invalid("A is not a Hopf subalgebra of H*".into()));
    }
    let cq = canonical_quotient(qt, a)?;
    let b = cq.presentation.dual_inclusion();
    let ab = a.intersect(&b);
    let phi = qt.phi();
    let one = h.one();
    let trivial_on = |s: &Subspace<F>| s.basis().iter().all(|p| phi.mul_vec(p) == scale_vec(&dot(p, &one), &one));
    let mut rep = AxiomReport { checks: Vec::new() };
    let idx_ok = n % a.dim() == 0 && b.dim() % (n / a.dim()) == 0;
    check(&mut rep, "[H*:A] divides dim B", idx_ok, || format!("{}/{} and {}", n, a.dim(), b.dim()));
    let pairing = a.basis().iter().all(|p| {
        let phi_p = phi.mul_vec(p);
        b.basis().iter().all(|q| dot(&phi_p, q) == dot(p, &one) * dot(q, &one))
    });
    check(&mut rep, "<Q, p (x) q> = p(1) q(1) for p in A, q in B", pairing, || "A (x) B".into());
    check(&mut rep, "Phi_R is trivial on A cap B", trivial_on(&ab), || "A cap B".into());
    check(&mut rep, "B = H* iff Phi_R is trivial on A", (b.dim() == n) == trivial_on(a), || "A".into());
    if qt.is_factorizable() {
        check(&mut rep, "dim A dim B = dim H", a.dim() * b.dim() == n, || format!("{} * {}", a.dim(), b.dim()));
        let eps = Subspace::span(n, [h.counit_vec().to_vec()]);
        check(&mut rep, "A cap B = k eps", ab == eps, || format!("dim {}", ab.dim()));
    }
    let hr = qt.h_r().dim();
    let m = cq.quotient().dim();
    check(&mut rep, "[H:H_R] divides dim H_A", n % hr == 0 && m % (n / hr) == 0, || format!("{n}/{hr} and {m}"));
    Ok(IndexReport { dim_a: a.dim(), dim_b: b.dim(), dim_intersection: ab.dim(), checks: rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a_c2, a_c2_r_family, drinfeld_double, group_algebra, FiniteGroup};
    use crate::Rational;

    fn ac2_qt() -> QtPair<Rational> {
        let h = a_c2::<Rational>();
        let r = a_c2_r_family(
            &h,
            Rational::from_int(1),
            Rational::from_int(2),
            Rational::from_int(0),
            Rational::from_int(-1),
        );
        QtPair::new(h, r).unwrap()
    }

    fn span_labels(h: &FiniteDimHopf<Rational>, names: &[&str]) -> Subspace<Rational> {
        let idx = |s: &str| h.labels().iter().position(|l| l == s).unwrap();
        Subspace::span(h.dim(), names.iter().map(|s| h.basis_vec(idx(s))))
    }

    #[test]
    fn ac2_full_dual() {
        let qt = ac2_qt();
        let cq = canonical_quotient(&qt, &Subspace::full(8)).unwrap();
        assert!(cq.report.passed(), "{}", cq.report);
        assert_eq!(cq.k_c, span_labels(qt.hopf(), &["1", "xg", "yg", "xy"]));
        assert_eq!(cq.quotient().dim(), 2);
        assert!(cq.r_bar.is_triangular());
        assert_eq!(cq.presentation.ideal.dim(), 6);
        let rep = central_gl_report(&qt, &cq).unwrap();
        assert!(rep.passed(), "{rep}");
        let seq = quotient_sequence_report(&qt, &Subspace::full(8)).unwrap();
        assert!(seq.passed(), "{seq}");
    }

    #[test]
    fn counit_gives_identity_quotient() {
        let qt = ac2_qt();
        let eps = Subspace::span(8, [qt.hopf().counit_vec().to_vec()]);
        let cq = canonical_quotient(&qt, &eps).unwrap();
        assert!(cq.report.passed(), "{}", cq.report);
        assert_eq!(cq.k_c.dim(), 1);
        assert_eq!(cq.quotient().dim(), 8);
        let seq = quotient_sequence_report(&qt, &eps).unwrap();
        assert!(seq.passed(), "{seq}");
        // anything with (p (x) t)(Q) = p(1) 1 on k eps factors through the identity
        let full = canonical_quotient(&qt, &Subspace::full(8)).unwrap();
        assert!(maximality_check(&qt, &cq, full.projection()).unwrap());
    }

    #[test]
    fn maximality() {
        let qt = ac2_qt();
        let cq = canonical_quotient(&qt, &Subspace::full(8)).unwrap();
        assert!(maximality_check(&qt, &cq, cq.projection()).unwrap());
        let eps = HopfMorphism::new(Matrix::from_rows(vec![qt.hopf().counit_vec().to_vec()], 8));
        assert!(maximality_check(&qt, &cq, &eps).unwrap());
        let id = HopfMorphism::new(Matrix::identity(8));
        let err = maximality_check(&qt, &cq, &id).unwrap_err().to_string();
        assert!(err.contains("basis vector"), "{err}");
    }

    #[test]
    fn grouplike_of_dual_maps_to_central_grouplike() {
        let qt = ac2_qt();
        let h = qt.hopf();
        let gl = group_likes(&h.dual()).unwrap();
        assert_eq!(gl.order(), 2);
        for g in &gl.elements {
            let c = Subspace::span(8, [g.clone()]);
            let cq = canonical_quotient(&qt, &c).unwrap();
            assert_eq!(cq.phi_c.dim(), 1);
            let a = &cq.phi_c.basis()[0];
            let a = scale_vec(&h.counit(a).inv().unwrap(), a);
            assert_eq!(h.comul(&a), Tensor::simple(&a, &a));
            assert!(h.center().contains(&a));
        }
    }

    #[test]
    fn factorizable_double_collapses() {
        let qt = drinfeld_double(&group_algebra::<Rational>(&FiniteGroup::cyclic(3))).unwrap();
        let cq = canonical_quotient(&qt, &Subspace::full(9)).unwrap();
        assert!(cq.report.passed(), "{}", cq.report);
        assert_eq!(cq.quotient().dim(), 1);
        let rep = central_gl_report(&qt, &cq).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn index_on_the_double() {
        let a = group_algebra::<Rational>(&FiniteGroup::cyclic(3));
        let qt = drinfeld_double(&a).unwrap();
        // functionals that only see the k^Z3 leg: e^i (x) e_j -> delta(i, i0) eps(e_j)
        let cand = Subspace::span(
            9,
            (0..3).map(|i0| {
                let mut v = vec![Rational::from_int(0); 9];
                for j in 0..3 {
                    v[i0 * 3 + j] = a.counit_vec()[j].clone();
                }
                v
            }),
        );
        let rep = index_report(&qt, &cand).unwrap();
        assert_eq!(rep.dim_a * rep.dim_b, 9);
        // Phi_R(p_x) = x while B = (H_A)* comes back as A itself
        assert_eq!(rep.dim_intersection, 3);
        let failed: Vec<&str> = rep.checks.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["Phi_R is trivial on A cap B", "A cap B = k eps"]);
    }

    #[test]
    fn index_on_ac2() {
        let qt = ac2_qt();
        let gl = group_likes(&qt.hopf().dual()).unwrap();
        let a = gl.span(8);
        let rep = index_report(&qt, &a).unwrap();
        assert!(rep.checks.passed(), "{}", rep.checks);
        assert_eq!(rep.dim_a, 2);
        assert_eq!(rep.dim_b % 4, 0);
    }

    #[test]
    fn rejects_non_subcoalgebra() {
        let qt = ac2_qt();
        let dual = qt.hopf().dual();
        let c = Subspace::span(8, [dual.basis_vec(2)]);
        assert!(canonical_quotient(&qt, &c).is_err());
    }
}
