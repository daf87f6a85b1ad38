use std::fs;
use std::path::Path;

use hopfkit::analysis::{
    characters, classification_report, s_matrix, transparent_characters, user_characters, CharacterSet,
    CharacterSource, ItemStatus, ReportItem,
};
use hopfkit::constructions::{drinfeld_double, enumerate_qt_group, group_algebra, FiniteGroup};
use hopfkit::hopf_core::{format_element, group_likes, verify_hopf_axioms, AxiomCheck};
use hopfkit::io::{self, LoadedAlgebra};
use hopfkit::qt_structure::verify_qt;
use hopfkit::quotients::{canonical_normality_report, canonical_quotient, central_gl_report, normality_criteria};
use hopfkit::{AxiomReport, Cyclo, Error, Hopf, Qt, Scalar, Subspace, Tensor};

use crate::report::{Map, Node};

/// Why a command stopped. Maps onto the exit codes.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Parse(String),
    Math(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Parse(_) => 2,
            Failure::Math(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Parse(m) | Failure::Math(m) => m,
        }
    }
}

fn math(e: Error) -> Failure {
    match e {
        Error::Parse(m) => Failure::Parse(m),
        other => Failure::Math(other.to_string()),
    }
}

/// A finished command: the report and whether everything it checked held.
pub struct Outcome {
    pub report: Node,
    pub ok: bool,
    /// Extra files to write, as (path, contents).
    pub files: Vec<(String, String)>,
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<LoadedAlgebra<Cyclo>, Failure> {
    io::load_algebra::<Cyclo>(&read(path)?).map_err(|e| Failure::Parse(format!("{path}: {e}")))
}

fn load_hopf(path: &str) -> Result<LoadedAlgebra<Cyclo>, Failure> {
    let loaded = load(path)?;
    let rep = verify_hopf_axioms(&loaded.hopf);
    match rep.first_failure() {
        Some(f) => Err(Failure::Math(format!("{path}: Hopf axiom fails: {f}"))),
        None => Ok(loaded),
    }
}

fn load_qt(path: &str) -> Result<Qt, Failure> {
    let loaded = load_hopf(path)?;
    let r = loaded.r.ok_or_else(|| Failure::Math(format!("{path}: no rmatrix in file")))?;
    Qt::new(loaded.hopf, r).map_err(math)
}

fn text(c: &Cyclo) -> String {
    c.to_text()
}

fn element(h: &Hopf, v: &[Cyclo]) -> String {
    format_element(h.labels(), v)
}

fn qt_report(h: &Hopf, r: &Tensor<Cyclo>) -> AxiomReport {
    verify_qt(h, r).unwrap_or_else(|e| AxiomReport {
        checks: vec![AxiomCheck { name: "R-matrix".into(), passed: false, witness: Some(e.to_string()) }],
    })
}

pub fn verify(path: &str) -> Result<Outcome, Failure> {
    let loaded = load(path)?;
    let h = &loaded.hopf;
    let axioms = verify_hopf_axioms(h);
    let mut m = Map::new();
    m.put("command", "verify").put("file", path).put("dim", h.dim()).put("basis", h.labels().to_vec());
    m.checks("hopf axioms", &axioms);
    let mut ok = axioms.passed();
    match &loaded.r {
        Some(r) if ok => {
            let rep = qt_report(h, r);
            ok &= rep.passed();
            m.checks("quasitriangular axioms", &rep);
        }
        Some(_) => {
            m.put("quasitriangular axioms", "skipped, the Hopf axioms fail");
        }
        None => {
            m.put("quasitriangular axioms", "no rmatrix in file");
        }
    }
    m.put("result", if ok { "pass" } else { "fail" });
    Ok(Outcome { report: m.into(), ok, files: Vec::new() })
}

fn load_characters(path: &str, h: &Hopf) -> Result<CharacterSet<Cyclo>, Failure> {
    let (n, vs) = io::load_vectors::<Cyclo>(&read(path)?).map_err(|e| Failure::Parse(format!("{path}: {e}")))?;
    if n != h.dim() {
        return Err(Failure::Parse(format!("{path}: characters live in dimension {n}, algebra has {}", h.dim())));
    }
    user_characters(h, vs).map_err(math)
}

fn s_matrix_section(qt: &Qt, chars: Result<CharacterSet<Cyclo>, String>) -> Node {
    let chars = match chars {
        Ok(c) => c,
        Err(why) => return Node::Text(format!("unavailable: {why}")),
    };
    let s = s_matrix(qt, &chars);
    let mut m = Map::new();
    m.put(
        "source",
        match chars.source {
            CharacterSource::CenterSplitting => "center splitting",
            CharacterSource::UserSupplied => "user supplied",
        },
    );
    m.put("degrees", chars.degrees.clone());
    m.put("entries", Node::List(s.entries.iter().map(|row| row.iter().map(text).collect::<Vec<_>>().into()).collect()));
    m.put("symmetric", s.symmetric).put("rank", s.rank).put("nondegenerate", s.nondegenerate);
    m.put("agrees with factorizable", s.matches_factorizable);
    if let Ok(t) = transparent_characters(qt, &chars) {
        m.put("transparent characters", t.transparent.clone());
        m.put("transparent = characters of the canonical quotient", t.equals_quotient_characters);
    }
    m.into()
}

pub fn analyze(path: &str, chars_path: Option<&str>) -> Result<Outcome, Failure> {
    let qt = load_qt(path)?;
    let h = qt.hopf();
    let mut m = Map::new();
    m.put("command", "analyze").put("file", path).put("dim", h.dim());
    let f = qt.flags();
    m.put("rank", f.rank);
    let mut dims = Map::new();
    dims.put("H_+", qt.h_plus().dim())
        .put("H_-", qt.h_minus().dim())
        .put("H_R", qt.h_r().dim())
        .put("Phi_R(H*)", qt.phi_image().dim());
    m.put("dims", dims);
    m.put("triangular", f.triangular).put("factorizable", f.factorizable).put("minimal", f.minimal);
    let d = qt.drinfeld_report();
    let mut dm = Map::new();
    dm.put("u", d.element)
        .put("invertible", d.invertible)
        .put("group-like", d.group_like)
        .put("central", d.central)
        .put("S^2 = Ad u", d.s2_is_ad_u);
    m.put("drinfeld element", dm);
    let chars = match chars_path {
        Some(p) => Ok(load_characters(p, h)?),
        None => characters(h).map_err(|e| e.to_string()),
    };
    m.put("s-matrix", s_matrix_section(&qt, chars));
    Ok(Outcome { report: m.into(), ok: true, files: Vec::new() })
}

fn coalgebra(spec: &str, qt: &Qt) -> Result<Subspace<Cyclo>, Failure> {
    let h = qt.hopf();
    match spec {
        "full" => Ok(Subspace::full(h.dim())),
        "grouplikes" => {
            let gl = group_likes(&h.dual()).map_err(math)?;
            Ok(Subspace::span(h.dim(), gl.elements))
        }
        p => io::load_subspace(&read(p)?).map_err(|e| Failure::Parse(format!("{p}: {e}"))),
    }
}

fn grouplike_images(qt: &Qt) -> Node {
    let h = qt.hopf();
    let gl = match group_likes(&h.dual()) {
        Ok(gl) => gl,
        Err(e) => return Node::Text(format!("unavailable: {e}")),
    };
    let phi = qt.phi();
    let center = h.center();
    let rows = gl
        .elements
        .iter()
        .map(|g| {
            let a = phi.mul_vec(g);
            let group_like = h.comul(&a) == Tensor::simple(&a, &a) && h.counit(&a) == <Cyclo as Scalar>::from_int(1);
            let central = center.contains(&a);
            Node::Item {
                name: element(h, &a),
                status: if group_like && central { "pass" } else { "FAIL" }.into(),
                detail: format!("group-like {group_like}, central {central}"),
            }
        })
        .collect();
    Node::List(rows)
}

pub fn quotient(path: &str, spec: &str, export: Option<&str>) -> Result<Outcome, Failure> {
    let qt = load_qt(path)?;
    let h = qt.hopf();
    let c = coalgebra(spec, &qt)?;
    let cq = canonical_quotient(&qt, &c).map_err(math)?;
    let bar = cq.quotient();
    let mut m = Map::new();
    m.put("command", "quotient").put("file", path).put("coalgebra", spec).put("dim C", c.dim());
    m.put("dim K_C", cq.k_c.dim()).put("dim H_bar", bar.dim());
    m.put("H_bar = k", bar.dim() == 1);
    m.put("H_bar triangular", cq.r_bar.is_triangular());
    m.put("K_C", Node::List(cq.k_c.basis().iter().map(|v| element(h, v).into()).collect()));
    let p = h.predicates(&cq.k_c);
    let mut km = Map::new();
    km.put("subalgebra", p.subalgebra)
        .put("left coideal", p.left_coideal)
        .put("ad-stable", p.ad_stable)
        .put("subcoalgebra", p.subcoalgebra)
        .put("normal Hopf subalgebra", p.normal);
    m.put("K_C predicates", km);
    m.checks("checks", &cq.report);
    let normality =
        if cq.is_full() { canonical_normality_report(&qt, &cq) } else { normality_criteria(&qt, cq.projection()) }
            .map_err(math)?;
    let mut nm = Map::new();
    nm.put("normal", normality.normal);
    let fired: Vec<String> = normality.criteria.iter().filter(|(_, v)| *v).map(|(n, _)| n.clone()).collect();
    nm.put("criteria that hold", fired);
    nm.checks("implications", &normality.implications);
    m.put("normality", nm);
    m.put("group-like images", grouplike_images(&qt));
    let mut ok = cq.report.passed() && normality.implications.passed();
    if cq.is_full() {
        let rep = central_gl_report(&qt, &cq).map_err(math)?;
        ok &= rep.passed();
        m.checks("central group-likes", &rep);
    }
    let mut files = Vec::new();
    if let Some(prefix) = export {
        files.push((format!("{prefix}.hopf.json"), io::save_algebra(bar, Some(cq.r_bar.r()), None)));
        files.push((format!("{prefix}.morphism.json"), io::save_morphism(cq.projection())));
    }
    Ok(Outcome { report: m.into(), ok, files })
}

pub fn enumerate_group(arg: &str) -> Result<Outcome, Failure> {
    let source = if Path::new(arg).is_file() { read(arg)? } else { arg.to_string() };
    if !source.trim_start().starts_with('{') && FiniteGroup::builtin(source.trim()).is_none() {
        return Err(Failure::Parse(format!("{arg}: no such file and not a built-in group (Zn, S3, Z7xZ3)")));
    }
    let g = io::load_group(&source).map_err(|e| Failure::Parse(format!("{arg}: {e}")))?;
    let rows = enumerate_qt_group::<Cyclo>(&g).map_err(math)?;
    let kg = group_algebra::<Cyclo>(&g);
    let mut ok = true;
    let mut out = Vec::new();
    for row in &rows {
        let mut rm = Map::new();
        rm.put("subgroup", row.subgroup.iter().map(|&i| g.labels[i].clone()).collect::<Vec<_>>());
        rm.put("exponent", row.rho.exponent);
        rm.put("rho", Node::List(row.rho.values.iter().map(|r| r.clone().into()).collect()));
        rm.put("multiplicity", row.multiplicity);
        rm.put("verified", row.qt_verified);
        ok &= row.qt_verified;
        match Qt::new(kg.clone(), row.r.clone()) {
            Ok(qt) => {
                let f = qt.flags();
                rm.put("rank", f.rank).put("triangular", f.triangular).put("factorizable", f.factorizable);
            }
            Err(e) => {
                ok = false;
                rm.put("error", e.to_string());
            }
        }
        out.push(rm.into());
    }
    let mut m = Map::new();
    m.put("command", "enumerate-group").put("group", g.name.clone()).put("order", g.order());
    m.put("count", rows.len()).put("rows", Node::List(out));
    Ok(Outcome { report: m.into(), ok, files: Vec::new() })
}

/// Builds `D(H)`. The algebra file goes to `out` when given, otherwise it
/// is the report itself.
pub fn double(path: &str, out: Option<&str>) -> Result<(Outcome, String), Failure> {
    let loaded = load_hopf(path)?;
    let qt = drinfeld_double(&loaded.hopf).map_err(math)?;
    let file = io::save_algebra(qt.hopf(), Some(qt.r()), None);
    let rep = qt_report(qt.hopf(), qt.r());
    let f = qt.flags();
    let mut m = Map::new();
    m.put("command", "double").put("file", path).put("dim", qt.hopf().dim());
    m.put("factorizable", f.factorizable).put("rank", f.rank);
    m.checks("quasitriangular axioms", &rep);
    if let Some(o) = out {
        m.put("written to", o);
    }
    Ok((Outcome { report: m.into(), ok: rep.passed(), files: Vec::new() }, file))
}

pub fn report(path: &str) -> Result<Outcome, Failure> {
    let qt = load_qt(path)?;
    let rep = classification_report(&qt).map_err(math)?;
    let mut m = Map::new();
    m.put("command", "report").put("file", path).put("dim", rep.dim).put("branch", rep.branch.clone());
    let item = |it: &ReportItem| Node::Item {
        name: it.name.clone(),
        status: match it.status {
            ItemStatus::Pass => "pass",
            ItemStatus::Fail => "FAIL",
            ItemStatus::NotApplicable => "n/a",
        }
        .into(),
        detail: it.evidence.clone(),
    };
    m.put("applicable", rep.applicable);
    m.put("hypotheses", Node::List(rep.hypotheses.iter().map(item).collect()));
    m.put("conclusions", Node::List(rep.items.iter().map(item).collect()));
    m.put("no applicable conclusion fails", rep.passed());
    Ok(Outcome { report: m.into(), ok: true, files: Vec::new() })
}
