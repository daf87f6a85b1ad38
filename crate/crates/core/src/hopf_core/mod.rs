//! Finite-dimensional Hopf algebras given by structure constants.

pub(crate) mod axioms;
mod dual;
mod grouplike;
mod integrals;
mod morphism;
mod subspaces;

pub use axioms::{verify_hopf_axioms, AxiomCheck, AxiomReport};
pub(crate) use grouplike::structure_conductor;
pub use grouplike::{group_likes, GroupLikes};
pub use integrals::{integrals, IntegralData};
pub use morphism::HopfMorphism;
pub use subspaces::{SubspaceHandle, SubspacePredicates};

use crate::error::{Error, Result};
use crate::exact_math::matrix::{is_zero_vec, unit_vec, zero_vec};
use crate::exact_math::{Matrix, Scalar, Tensor};

pub type SparseVec<F> = Vec<(usize, F)>;

fn sparse<F: Scalar>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// A Hopf algebra on the basis `e_0, ..., e_{n-1}`.
///
/// `mult[i][j]` is `e_i e_j`, `comult[i]` lists the terms `(j, k, c)` of
/// `Delta(e_i) = sum c e_j (x) e_k`, and column `j` of `antipode` is `S(e_j)`.
/// Construction only checks shapes; use [`verify_hopf_axioms`] or
/// [`FiniteDimHopf::new_verified`] for the axioms.
#[derive(Clone, Debug)]
pub struct FiniteDimHopf<F> {
    labels: Vec<String>,
    mult: Vec<Vec<SparseVec<F>>>,
    unit: Vec<F>,
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Matrix<F>,
    antipode_inv: Option<Matrix<F>>,
}

impl<F: Scalar> FiniteDimHopf<F> {
    /// Builds from dense closures on basis indices.
    pub fn from_fns(
        labels: Vec<String>,
        mult: impl Fn(usize, usize) -> Vec<F>,
        unit: Vec<F>,
        comult: impl Fn(usize) -> Tensor<F>,
        counit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut m = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let v = mult(i, j);
                if v.len() != n {
                    return Err(Error::Dimension(format!("product e{i}*e{j} has length {}", v.len())));
                }
                row.push(sparse(&v));
            }
            m.push(row);
        }
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let t = comult(i);
            if t.left_dim() != n || t.right_dim() != n {
                return Err(Error::Dimension(format!("coproduct of e{i} has wrong shape")));
            }
            c.push(t.nonzeros());
        }
        Self::from_sparse(labels, m, unit, c, counit, antipode)
    }

    pub fn from_sparse(
        labels: Vec<String>,
        mult: Vec<Vec<SparseVec<F>>>,
        unit: Vec<F>,
        comult: Vec<Vec<(usize, usize, F)>>,
        counit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        let bad = |what: &str| Err(Error::Dimension(format!("{what} does not match dimension {n}")));
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            return bad("multiplication table");
        }
        if mult.iter().flatten().flatten().any(|(k, _)| *k >= n) {
            return bad("multiplication index");
        }
        if unit.len() != n {
            return bad("unit");
        }
        if comult.len() != n || comult.iter().flatten().any(|(j, k, _)| *j >= n || *k >= n) {
            return bad("comultiplication");
        }
        if counit.len() != n {
            return bad("counit");
        }
        if antipode.rows() != n || antipode.cols() != n {
            return bad("antipode");
        }
        let mult = mult
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect())
            .collect();
        let comult = comult.into_iter().map(|t| t.into_iter().filter(|(_, _, c)| !c.is_zero()).collect()).collect();
        let antipode_inv = antipode.inverse();
        Ok(FiniteDimHopf { labels, mult, unit, comult, counit, antipode, antipode_inv })
    }

    /// Builds and checks every Hopf axiom.
    pub fn new_verified(self) -> Result<Self> {
        let rep = verify_hopf_axioms(&self);
        if rep.passed() {
            Ok(self)
        } else {
            Err(Error::Axiom(rep.first_failure().unwrap_or_default()))
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F> {
        unit_vec(self.dim(), i)
    }

    pub fn one(&self) -> Vec<F> {
        self.unit.clone()
    }

    pub fn counit_vec(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Option<&Matrix<F>> {
        self.antipode_inv.as_ref()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mult[i][j]
    }

    pub fn comul_basis(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comult[i]
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out: Vec<F> = zero_vec(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (k, c) in &self.mult[i][j] {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[F]]) -> Vec<F> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn comul(&self, a: &[F]) -> Tensor<F> {
        let n = self.dim();
        let mut t: Tensor<F> = Tensor::zeros(n, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                t.entry_mut(*j, *k).add_mul(x, c);
            }
        }
        t
    }

    pub fn counit(&self, a: &[F]) -> F {
        crate::exact_math::matrix::dot(&self.counit, a)
    }

    pub fn s(&self, a: &[F]) -> Vec<F> {
        self.antipode.mul_vec(a)
    }

    pub fn s_inv(&self, a: &[F]) -> Option<Vec<F>> {
        self.antipode_inv.as_ref().map(|m| m.mul_vec(a))
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.mul(a, &self.basis_vec(j))).collect();
        Matrix::from_cols(&cols, n)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.mul(&self.basis_vec(j), a)).collect();
        Matrix::from_cols(&cols, n)
    }

    /// Product in `H (x) H`.
    pub fn tensor_mul(&self, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
        let n = self.dim();
        let mut out: Tensor<F> = Tensor::zeros(n, n);
        let ys = y.nonzeros();
        for (a, b, cx) in x.nonzeros() {
            for (c, d, cy) in &ys {
                let c0 = cx.mul_ref(cy);
                for (k, p) in &self.mult[a][*c] {
                    let c1 = c0.mul_ref(p);
                    for (l, q) in &self.mult[b][*d] {
                        out.entry_mut(*k, *l).add_mul(&c1, q);
                    }
                }
            }
        }
        out
    }

    pub fn tensor_one(&self) -> Tensor<F> {
        Tensor::simple(&self.unit, &self.unit)
    }

    /// `(f (x) g)(t)` for linear maps given as matrices.
    pub fn tensor_apply(&self, t: &Tensor<F>, f: &Matrix<F>, g: &Matrix<F>) -> Tensor<F> {
        t.apply(f, g)
    }

    /// `ad_h(a) = h_1 a S(h_2)`
    pub fn ad(&self, h: &[F], a: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, j, c) in self.comul(h).nonzeros() {
            let left = self.mul(&self.basis_vec(i), a);
            let v = self.mul(&left, &self.s(&self.basis_vec(j)));
            crate::exact_math::matrix::axpy(&mut out, &c, &v);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let t = self.comul(&self.basis_vec(i));
            t == t.flip()
        })
    }

    /// Trace of `S^2`; nonzero exactly when the algebra is semisimple.
    pub fn trace_s2(&self) -> F {
        self.antipode.mul(&self.antipode).trace()
    }

    pub fn is_semisimple(&self) -> bool {
        !self.trace_s2().is_zero()
    }

    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn comult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (i, t) in self.comult.iter().enumerate() {
            let mut terms = t.clone();
            terms.sort_by_key(|(j, k, _)| (*j, *k));
            for (j, k, c) in terms {
                out.push((i, j, k, c));
            }
        }
        out
    }

    /// Equal structure tensors on the same basis.
    pub fn same_structure(&self, other: &FiniteDimHopf<F>) -> bool {
        self.dim() == other.dim()
            && self.mult_entries() == other.mult_entries()
            && self.unit == other.unit
            && self.comult_entries() == other.comult_entries()
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Structure restricted to a subspace closed under every operation,
    /// written in the echelon basis of the subspace.
    pub fn restrict(&self, space: &crate::exact_math::Subspace<F>, labels: Vec<String>) -> Result<Self> {
        let d = space.dim();
        let basis = space.basis().to_vec();
        let coords =
            |v: &[F]| space.coords(v).ok_or_else(|| Error::Invalid("subspace is not a Hopf subalgebra".into()));
        let mut mult = Vec::with_capacity(d);
        for a in &basis {
            let mut row = Vec::with_capacity(d);
            for b in &basis {
                row.push(sparse(&coords(&self.mul(a, b))?));
            }
            mult.push(row);
        }
        let unit = coords(&self.unit)?;
        let mut comult = Vec::with_capacity(d);
        for a in &basis {
            let t = self.comul(a);
            // write t in basis (x) basis: first the rows, then the columns
            let mut rows_c = Vec::new();
            for i in 0..self.dim() {
                rows_c.push(coords(t.0.row(i))?);
            }
            let mut out = Vec::new();
            for k in 0..d {
                let col: Vec<F> = rows_c.iter().map(|r| r[k].clone()).collect();
                let cc = coords(&col)?;
                for (j, c) in cc.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.push((j, k, c));
                    }
                }
            }
            comult.push(out);
        }
        let counit = basis.iter().map(|a| self.counit(a)).collect();
        let s_cols: Vec<Vec<F>> = basis.iter().map(|a| coords(&self.s(a))).collect::<Result<_>>()?;
        let antipode = Matrix::from_cols(&s_cols, d);
        Self::from_sparse(labels, mult, unit, comult, counit, antipode)
    }

    /// Whether `v` is zero; convenience for callers holding raw vectors.
    pub fn is_zero(&self, v: &[F]) -> bool {
        is_zero_vec(v)
    }
}

/// Human-readable form of an element using the basis labels.
pub fn format_element<F: Scalar>(labels: &[String], v: &[F]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let s = c.to_string();
            if s == "1" {
                labels[i].clone()
            } else if s.contains(' ') {
                format!("({s})*{}", labels[i])
            } else {
                format!("{s}*{}", labels[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
