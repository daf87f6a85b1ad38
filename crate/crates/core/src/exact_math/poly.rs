//! Dense univariate polynomials, lowest degree first.

use super::scalar::Scalar;

pub fn trim<F: Scalar>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree<F: Scalar>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative<F: Scalar>(p: &[F]) -> Vec<F> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| F::from_int(k as i64).mul_ref(c)).collect())
}

pub fn eval<F: Scalar>(p: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in p.iter().rev() {
        acc = acc.mul_ref(x);
        acc += c;
    }
    acc
}

pub fn monic<F: Scalar>(p: &[F]) -> Vec<F> {
    let p = trim(p.to_vec());
    let inv = p.last().expect("zero polynomial").inv().unwrap();
    p.iter().map(|c| c.mul_ref(&inv)).collect()
}

pub fn div_rem<F: Scalar>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().mul_ref(&lead_inv);
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let t = c.mul_ref(bj);
                r[k + j] -= &t;
            }
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor.
pub fn gcd<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(&a)
    }
}

/// Squarefree part of a nonzero polynomial, monic.
pub fn squarefree<F: Scalar>(p: &[F]) -> Vec<F> {
    let d = derivative(p);
    if d.is_empty() {
        return monic(p);
    }
    let g = gcd(p, &d);
    monic(&div_rem(p, &g).0)
}

/// `p / (x - r)` for a root `r`.
pub fn deflate<F: Scalar>(p: &[F], r: &F) -> Vec<F> {
    let p = trim(p.to_vec());
    let n = p.len() - 1;
    let mut q = vec![F::zero(); n];
    let mut carry = F::zero();
    for k in (0..n).rev() {
        carry = p[k + 1].clone() + carry.mul_ref(r);
        q[k] = carry.clone();
    }
    q
}
