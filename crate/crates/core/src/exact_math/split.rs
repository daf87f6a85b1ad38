//! Splitting commutative semisimple algebras into primitive idempotents.

use super::matrix::{is_zero_vec, zero_vec, Matrix};
use super::poly;
use super::roots::roots_in_field;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Primitive idempotents and the matching characters found in the field.
#[derive(Clone, Debug)]
pub struct Splitting<F> {
    pub idempotents: Vec<Vec<F>>,
    /// `characters[j][i]` is the value of the j-th character on basis vector i.
    pub characters: Vec<Vec<F>>,
    /// False when some characters take values outside the searched field.
    pub complete: bool,
}

/// Minimal polynomial of `b` in an algebra with unit `one`, monic, lowest
/// degree first.
pub fn minimal_polynomial<F: Scalar>(dim: usize, one: &[F], b: &[F], mul: &dyn Fn(&[F], &[F]) -> Vec<F>) -> Vec<F> {
    let mut powers: Vec<Vec<F>> = vec![one.to_vec()];
    loop {
        let next = mul(b, powers.last().unwrap());
        let m = Matrix::from_cols(&powers, dim);
        if let Some(c) = m.solve(&next) {
            let mut p: Vec<F> = c.into_iter().map(|x| -x).collect();
            p.push(F::one());
            return p;
        }
        powers.push(next);
    }
}

/// Splits a commutative semisimple algebra, searching for character values
/// in each conductor of `conductors` in turn.
///
/// Idempotents are refined one basis vector at a time, so only minimal
/// polynomials of single basis vectors on each block are ever factored.
pub fn split_commutative<F: Scalar>(
    dim: usize,
    one: &[F],
    mul: &dyn Fn(&[F], &[F]) -> Vec<F>,
    conductors: &[u32],
) -> Result<Splitting<F>> {
    if dim == 0 {
        return Ok(Splitting { idempotents: vec![], characters: vec![], complete: true });
    }
    let basis = |i: usize| {
        let mut v = zero_vec::<F>(dim);
        v[i] = F::one();
        v
    };
    let block_rank = |e: &[F]| Subspace::span(dim, (0..dim).map(|i| mul(e, &basis(i)))).dim();
    let mut complete = true;
    let mut done: Vec<Vec<F>> = Vec::new();
    let mut open: Vec<Vec<F>> = vec![one.to_vec()];
    for i in 0..dim {
        if open.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for e in open {
            let b = mul(&basis(i), &e);
            let mu = minimal_polynomial(dim, &e, &b, mul);
            let deg = mu.len() - 1;
            if deg == 1 {
                next.push(e);
                continue;
            }
            let dmu = poly::derivative(&mu);
            let mut roots = Vec::new();
            for &c in conductors {
                roots = roots_in_field(&mu, c);
                if roots.len() == deg {
                    break;
                }
            }
            if roots.len() < deg {
                complete = false;
            }
            for r in &roots {
                // E = (mu(x) / (x - r))(b) / mu'(r) inside the block e
                let q = poly::deflate(&mu, r);
                let scale = poly::eval(&dmu, r)
                    .inv()
                    .ok_or_else(|| Error::Unsupported("algebra is not semisimple (repeated root)".into()))?;
                let mut f = zero_vec::<F>(dim);
                for c in q.iter().rev() {
                    f = mul(&b, &f);
                    for (fi, oi) in f.iter_mut().zip(&e) {
                        fi.add_mul(c, oi);
                    }
                }
                next.push(f.iter().map(|x| x.mul_ref(&scale)).collect());
            }
        }
        open = Vec::new();
        for e in next {
            if block_rank(&e) == 1 {
                done.push(e);
            } else {
                open.push(e);
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::Unsupported(
            "algebra is not split semisimple commutative (basis does not separate blocks)".into(),
        ));
    }
    let mut idempotents = Vec::new();
    let mut characters = Vec::new();
    for e in done {
        let piv = e.iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
        let pinv = e[piv].inv().unwrap();
        let chi: Vec<F> = (0..dim).map(|i| mul(&basis(i), &e)[piv].mul_ref(&pinv)).collect();
        idempotents.push(e);
        characters.push(chi);
    }
    debug_assert!(idempotents.iter().all(|e| !is_zero_vec(e)));
    debug_assert!(Subspace::span(dim, idempotents.clone()).dim() == idempotents.len());
    Ok(Splitting { idempotents, characters, complete })
}
