use super::matrix::{is_zero_vec, zero_vec, Matrix};
use super::scalar::Scalar;

/// A subspace of `F^n` stored by its reduced row echelon basis.
///
/// The echelon form is unique, so structural equality is equality of
/// subspaces.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| super::matrix::unit_vec(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().filter(|v| !is_zero_vec(v)).collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(rows, ambient);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// What is left of `v` after eliminating against the basis.
    pub fn residual(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f.mul_ref(y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.residual(v))
    }

    /// Coordinates of `v` in the echelon basis.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_all(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        // solve sum x_i u_i - sum y_j w_j = 0
        let mut cols: Vec<Vec<F>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_cols(&cols, self.ambient);
        let vecs = m.kernel().into_iter().map(|k| {
            let mut v = zero_vec(self.ambient);
            for (i, c) in k[..a].iter().enumerate() {
                super::matrix::axpy(&mut v, c, &self.basis[i]);
            }
            v
        });
        Subspace::span(self.ambient, vecs)
    }

    /// Indices of standard basis vectors that complete this subspace to the
    /// whole space, chosen lexicographically first.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut out = Vec::new();
        for i in 0..self.ambient {
            if cur.dim() == self.ambient {
                break;
            }
            let e = super::matrix::unit_vec(self.ambient, i);
            if !cur.contains(&e) {
                cur = Subspace::span(self.ambient, cur.basis.iter().cloned().chain([e]));
                out.push(i);
            }
        }
        out
    }

    pub fn map<G: Fn(&[F]) -> Vec<F>>(&self, target_dim: usize, f: G) -> Subspace<F> {
        Subspace::span(target_dim, self.basis.iter().map(|v| f(v)))
    }
}
