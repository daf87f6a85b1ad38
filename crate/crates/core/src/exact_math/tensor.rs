use super::matrix::{axpy, zero_vec, Matrix};
use super::scalar::Scalar;

/// An element of `V (x) W` stored as its coefficient matrix: entry `(i, j)`
/// is the coefficient of `e_i (x) e_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<F>(pub Matrix<F>);

impl<F: Scalar> Tensor<F> {
    pub fn zeros(left: usize, right: usize) -> Self {
        Tensor(Matrix::zeros(left, right))
    }

    pub fn simple(x: &[F], y: &[F]) -> Self {
        let mut t = Self::zeros(x.len(), y.len());
        t.add_simple(&F::one(), x, y);
        t
    }

    pub fn left_dim(&self) -> usize {
        self.0.rows()
    }

    pub fn right_dim(&self) -> usize {
        self.0.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        self.0.get(i, j)
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut F {
        self.0.entry_mut(i, j)
    }

    /// `self += c * x (x) y`
    pub fn add_simple(&mut self, c: &F, x: &[F], y: &[F]) {
        if c.is_zero() {
            return;
        }
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ca = c.mul_ref(a);
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    self.0.entry_mut(i, j).add_mul(&ca, b);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Tensor<F>) {
        for i in 0..self.left_dim() {
            for j in 0..self.right_dim() {
                let v = other.get(i, j);
                if !v.is_zero() {
                    *self.entry_mut(i, j) += v;
                }
            }
        }
    }

    pub fn scaled(&self, c: &F) -> Tensor<F> {
        Tensor(Matrix::from_data(
            self.left_dim(),
            self.right_dim(),
            self.0.data().iter().map(|x| c.mul_ref(x)).collect(),
        ))
    }

    pub fn nonzeros(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.left_dim() {
            for j in 0..self.right_dim() {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The flip `x (x) y -> y (x) x`.
    pub fn flip(&self) -> Tensor<F> {
        Tensor(self.0.transpose())
    }

    /// `(A (x) B)(self)` for matrices acting on column vectors.
    pub fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Tensor<F> {
        Tensor(a.mul(&self.0).mul(&b.transpose()))
    }

    /// `(p (x) id)(self)`
    pub fn contract_left(&self, p: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.right_dim());
        for (i, c) in p.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.0.row(i));
            }
        }
        out
    }

    /// `(id (x) p)(self)`
    pub fn contract_right(&self, p: &[F]) -> Vec<F> {
        self.0.mul_vec(p)
    }

    /// Span of the right tensorands (the rows).
    pub fn right_legs(&self) -> Vec<Vec<F>> {
        (0..self.left_dim()).map(|i| self.0.row(i).to_vec()).collect()
    }

    /// Span of the left tensorands (the columns).
    pub fn left_legs(&self) -> Vec<Vec<F>> {
        (0..self.right_dim()).map(|j| self.0.col(j)).collect()
    }

    pub fn flatten(&self) -> Vec<F> {
        self.0.data().to_vec()
    }

    pub fn from_flat(left: usize, right: usize, v: Vec<F>) -> Self {
        Tensor(Matrix::from_data(left, right, v))
    }
}
