//! JSON file formats for algebras, R-matrices, groups, morphisms and
//! subspaces. Scalars are strings in the exact text format.
//!
//! Writers emit one entry per line in a fixed key order, so saving is
//! deterministic and a saved file loads back to identical structure.

use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::constructions::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::{FiniteDimHopf, HopfMorphism};

/// On-disk form of an algebra, optionally with an R-matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` on `e_k`.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
    /// `[i, j, k, c]`: `Delta(e_i)` has coefficient `c` on `e_j (x) e_k`.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(usize, String)>,
    /// `[i, j, c]`: `S(e_j)` has coefficient `c` on `e_i`.
    pub antipode: Vec<(usize, usize, String)>,
    /// `[i, j, c]`: `R` has coefficient `c` on `e_i (x) e_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<(usize, usize, String)>>,
}

/// An algebra with its R-matrix, if the file has one.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra<F> {
    pub name: Option<String>,
    pub hopf: FiniteDimHopf<F>,
    pub r: Option<Tensor<F>>,
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

fn scalar<F: Scalar>(s: &str, what: &str) -> Result<F> {
    F::parse_scalar(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn index(i: usize, n: usize, what: &str) -> Result<usize> {
    if i < n {
        Ok(i)
    } else {
        Err(Error::Parse(format!("{what}: index {i} out of range for dimension {n}")))
    }
}

fn dense<F: Scalar>(n: usize, entries: &[(usize, String)], what: &str) -> Result<Vec<F>> {
    let mut v = vec![F::zero(); n];
    for (i, c) in entries {
        v[index(*i, n, what)?] += &scalar::<F>(c, what)?;
    }
    Ok(v)
}

fn sparse_text<F: Scalar>(v: &[F]) -> Vec<(usize, String)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_text())).collect()
}

fn matrix_text<F: Scalar>(m: &Matrix<F>) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !c.is_zero() {
                out.push((i, j, c.to_text()));
            }
        }
    }
    out
}

fn matrix_from_text<F: Scalar>(
    rows: usize,
    cols: usize,
    entries: &[(usize, usize, String)],
    what: &str,
) -> Result<Matrix<F>> {
    let mut m = Matrix::zeros(rows, cols);
    for (i, j, c) in entries {
        let (i, j) = (index(*i, rows, what)?, index(*j, cols, what)?);
        *m.entry_mut(i, j) += &scalar::<F>(c, what)?;
    }
    Ok(m)
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn from_hopf<F: Scalar>(h: &FiniteDimHopf<F>, r: Option<&Tensor<F>>, name: Option<&str>) -> Self {
        let mut mult: Vec<_> = h.mult_entries().into_iter().map(|(i, j, k, c)| (i, j, k, c.to_text())).collect();
        mult.sort_by_key(|e| (e.0, e.1, e.2));
        let mut comult: Vec<_> = h.comult_entries().into_iter().map(|(i, j, k, c)| (i, j, k, c.to_text())).collect();
        comult.sort_by_key(|e| (e.0, e.1, e.2));
        AlgebraFile {
            name: name.map(str::to_string),
            dim: h.dim(),
            basis: h.labels().to_vec(),
            mult,
            unit: sparse_text(&h.one()),
            comult,
            counit: sparse_text(h.counit_vec()),
            antipode: matrix_text(h.antipode()),
            rmatrix: r.map(|t| matrix_text(&t.0)),
        }
    }

    /// Structure constants only; axioms are the caller's business.
    pub fn to_algebra<F: Scalar>(&self) -> Result<LoadedAlgebra<F>> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse(format!("basis has {} labels, dim is {n}", self.basis.len())));
        }
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, j, k, c) in &self.mult {
            let (i, j, k) = (index(*i, n, "mult")?, index(*j, n, "mult")?, index(*k, n, "mult")?);
            let row: &mut Vec<(usize, F)> = &mut mult[i][j];
            let c = scalar::<F>(c, "mult")?;
            match row.iter_mut().find(|(t, _)| *t == k) {
                Some((_, v)) => *v += &c,
                None => row.push((k, c)),
            }
        }
        for row in mult.iter_mut() {
            for v in row.iter_mut() {
                v.sort_by_key(|(k, _)| *k);
            }
        }
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            let (i, j, k) = (index(*i, n, "comult")?, index(*j, n, "comult")?, index(*k, n, "comult")?);
            let terms: &mut Vec<(usize, usize, F)> = &mut comult[i];
            let c = scalar::<F>(c, "comult")?;
            match terms.iter_mut().find(|(a, b, _)| (*a, *b) == (j, k)) {
                Some((_, _, v)) => *v += &c,
                None => terms.push((j, k, c)),
            }
        }
        for t in comult.iter_mut() {
            t.sort_by_key(|(j, k, _)| (*j, *k));
        }
        let unit = dense(n, &self.unit, "unit")?;
        let counit = dense(n, &self.counit, "counit")?;
        let antipode = matrix_from_text(n, n, &self.antipode, "antipode")?;
        let hopf = FiniteDimHopf::from_sparse(self.basis.clone(), mult, unit, comult, counit, antipode)?;
        let r = match &self.rmatrix {
            Some(entries) => Some(Tensor(matrix_from_text(n, n, entries, "rmatrix")?)),
            None => None,
        };
        Ok(LoadedAlgebra { name: self.name.clone(), hopf, r })
    }

    /// Deterministic text: fixed key order, one entry per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let q = |s: &str| serde_json::to_string(s).expect("string");
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", q(name));
        }
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        let labels: Vec<String> = self.basis.iter().map(|l| q(l)).collect();
        let _ = writeln!(out, "  \"basis\": [{}],", labels.join(", "));
        let lines = |out: &mut String, key: &str, items: Vec<String>, last: bool| {
            let _ = write!(out, "  \"{key}\": [");
            if items.is_empty() {
                out.push(']');
            } else {
                out.push('\n');
                let body: Vec<String> = items.into_iter().map(|s| format!("    {s}")).collect();
                out.push_str(&body.join(",\n"));
                out.push_str("\n  ]");
            }
            out.push_str(if last { "\n" } else { ",\n" });
        };
        let e4 = |v: &[(usize, usize, usize, String)]| -> Vec<String> {
            v.iter().map(|(i, j, k, c)| format!("[{i}, {j}, {k}, {}]", q(c))).collect()
        };
        let e3 = |v: &[(usize, usize, String)]| -> Vec<String> {
            v.iter().map(|(i, j, c)| format!("[{i}, {j}, {}]", q(c))).collect()
        };
        let e2 = |v: &[(usize, String)]| -> Vec<String> { v.iter().map(|(i, c)| format!("[{i}, {}]", q(c))).collect() };
        let has_r = self.rmatrix.is_some();
        lines(&mut out, "mult", e4(&self.mult), false);
        lines(&mut out, "unit", e2(&self.unit), false);
        lines(&mut out, "comult", e4(&self.comult), false);
        lines(&mut out, "counit", e2(&self.counit), false);
        lines(&mut out, "antipode", e3(&self.antipode), !has_r);
        if let Some(r) = &self.rmatrix {
            lines(&mut out, "rmatrix", e3(r), true);
        }
        out.push_str("}\n");
        out
    }
}

pub fn load_algebra<F: Scalar>(text: &str) -> Result<LoadedAlgebra<F>> {
    AlgebraFile::parse(text)?.to_algebra()
}

pub fn save_algebra<F: Scalar>(h: &FiniteDimHopf<F>, r: Option<&Tensor<F>>, name: Option<&str>) -> String {
    AlgebraFile::from_hopf(h, r, name).to_json()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A built-in name (`Z{n}`, `S3`, `Z7xZ3`) or a group JSON document.
pub fn load_group(spec_or_text: &str) -> Result<FiniteGroup> {
    if let Some(g) = FiniteGroup::builtin(spec_or_text.trim()) {
        return Ok(g);
    }
    let f: GroupFile = parse_json(spec_or_text)?;
    if f.table.len() != f.order {
        return Err(Error::Parse(format!("table has {} rows, order is {}", f.table.len(), f.order)));
    }
    let labels = f.labels.unwrap_or_else(|| (0..f.order).map(|i| format!("g{i}")).collect());
    FiniteGroup::from_table(f.name.as_deref().unwrap_or("G"), labels, f.table)
}

pub fn save_group(g: &FiniteGroup) -> String {
    let f = GroupFile {
        name: Some(g.name.clone()),
        labels: Some(g.labels.clone()),
        order: g.order(),
        table: g.table().to_vec(),
    };
    serde_json::to_string_pretty(&f).expect("group json") + "\n"
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source_dim: usize,
    pub target_dim: usize,
    /// `[i, j, c]`: the image of `e_j` has coefficient `c` on `f_i`.
    pub entries: Vec<(usize, usize, String)>,
}

pub fn load_morphism<F: Scalar>(text: &str) -> Result<HopfMorphism<F>> {
    let f: MorphismFile = parse_json(text)?;
    Ok(HopfMorphism::new(matrix_from_text(f.target_dim, f.source_dim, &f.entries, "morphism")?))
}

pub fn save_morphism<F: Scalar>(m: &HopfMorphism<F>) -> String {
    let f = MorphismFile { source_dim: m.source_dim(), target_dim: m.target_dim(), entries: matrix_text(&m.matrix) };
    serde_json::to_string(&f).expect("morphism json") + "\n"
}

/// A list of sparse vectors: a subspace basis or a set of characters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorsFile {
    pub ambient: usize,
    pub vectors: Vec<Vec<(usize, String)>>,
}

pub fn load_vectors<F: Scalar>(text: &str) -> Result<(usize, Vec<Vec<F>>)> {
    let f: VectorsFile = parse_json(text)?;
    let vs = f.vectors.iter().map(|v| dense(f.ambient, v, "vector")).collect::<Result<_>>()?;
    Ok((f.ambient, vs))
}

pub fn load_subspace<F: Scalar>(text: &str) -> Result<Subspace<F>> {
    let (n, vs) = load_vectors(text)?;
    Ok(Subspace::span(n, vs))
}

pub fn save_vectors<F: Scalar>(ambient: usize, vs: &[Vec<F>]) -> String {
    let f = VectorsFile { ambient, vectors: vs.iter().map(|v| sparse_text(v)).collect() };
    serde_json::to_string(&f).expect("vectors json") + "\n"
}
