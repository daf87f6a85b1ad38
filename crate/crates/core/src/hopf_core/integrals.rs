use serde::Serialize;

use super::FiniteDimHopf;
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Scalar};

/// Integrals and the two distinguished group-likes.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralData<F> {
    /// Left integral, scaled so its first nonzero coordinate is 1.
    #[serde(skip)]
    pub left: Vec<F>,
    #[serde(skip)]
    pub right: Vec<F>,
    /// Modular function `alpha` in the dual: `Lambda h = alpha(h) Lambda`.
    #[serde(skip)]
    pub modular: Vec<F>,
    /// Distinguished group-like of `H`, the modular function of the dual.
    #[serde(skip)]
    pub distinguished: Vec<F>,
    pub unimodular: bool,
}

fn normalize<F: Scalar>(v: Vec<F>) -> Vec<F> {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero integral");
    let inv = lead.inv().unwrap();
    v.iter().map(|x| x.mul_ref(&inv)).collect()
}

fn integral_space<F: Scalar>(h: &FiniteDimHopf<F>, left: bool) -> Result<Vec<F>> {
    let n = h.dim();
    let mut m = Matrix::zeros(n * n, n);
    for k in 0..n {
        let op = if left { h.left_mult_matrix(&h.basis_vec(k)) } else { h.right_mult_matrix(&h.basis_vec(k)) };
        let eps = &h.counit_vec()[k];
        for i in 0..n {
            for j in 0..n {
                let mut v = op.get(i, j).clone();
                if i == j {
                    v -= eps;
                }
                m.set(k * n + i, j, v);
            }
        }
    }
    let ker = m.kernel();
    if ker.len() != 1 {
        return Err(Error::Axiom(format!("space of integrals has dimension {}", ker.len())));
    }
    Ok(normalize(ker.into_iter().next().unwrap()))
}

fn modular_function<F: Scalar>(h: &FiniteDimHopf<F>, lambda: &[F]) -> Vec<F> {
    let piv = lambda.iter().position(|x| !x.is_zero()).unwrap();
    let inv = lambda[piv].inv().unwrap();
    (0..h.dim()).map(|k| h.mul(lambda, &h.basis_vec(k))[piv].mul_ref(&inv)).collect()
}

pub fn integrals<F: Scalar>(h: &FiniteDimHopf<F>) -> Result<IntegralData<F>> {
    let left = integral_space(h, true)?;
    let right = integral_space(h, false)?;
    let modular = modular_function(h, &left);
    let dual = h.dual();
    let dual_left = integral_space(&dual, true)?;
    let distinguished = modular_function(&dual, &dual_left);
    let unimodular = modular.as_slice() == h.counit_vec();
    Ok(IntegralData { left, right, modular, distinguished, unimodular })
}
