//! Integral LLL reduction (delta = 3/4) with exact Gram-Schmidt data kept as
//! integers, following the classical integral variant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn round_div(a: &BigInt, d: &BigInt) -> BigInt {
    // nearest integer to a/d for d > 0
    let two = BigInt::from(2);
    (a * &two + d).div_floor(&(d * &two))
}

/// Reduces a basis of linearly independent integer vectors in place.
pub fn lll_reduce(b: &mut [Vec<BigInt>]) {
    let n = b.len();
    if n < 2 {
        return;
    }
    // one-based bookkeeping: d[0] = 1, lambda[k][j] for j < k
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::from(1);
    d[1] = dot(&b[0], &b[0]);
    let mut k = 2;
    let mut kmax = 1;

    let redi = |b: &mut [Vec<BigInt>], lam: &mut Vec<Vec<BigInt>>, d: &[BigInt], k: usize, l: usize| {
        let twice: BigInt = &lam[k][l] * 2;
        if twice.abs() > d[l] {
            let q = round_div(&lam[k][l], &d[l]);
            let bl = b[l - 1].clone();
            for (x, y) in b[k - 1].iter_mut().zip(&bl) {
                *x -= &q * y;
            }
            let t = &q * &d[l];
            lam[k][l] -= t;
            for i in 1..l {
                let t = &q * &lam[l][i];
                lam[k][i] -= t;
            }
        }
    };

    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&b[k - 1], &b[j - 1]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input vectors are dependent");
                    d[k] = u;
                }
            }
        }
        loop {
            redi(b, &mut lam, &d, k, k - 1);
            let lhs: BigInt = &d[k] * &d[k - 2] * 4;
            let rhs: BigInt = &d[k - 1] * &d[k - 1] * 3 - &lam[k][k - 1] * &lam[k][k - 1] * 4;
            if lhs < rhs {
                b.swap(k - 1, k - 2);
                for j in 1..k - 1 {
                    let t = lam[k][j].clone();
                    lam[k][j] = lam[k - 1][j].clone();
                    lam[k - 1][j] = t;
                }
                let l = lam[k][k - 1].clone();
                let bb = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
                for i in k + 1..=kmax {
                    let t = lam[i][k].clone();
                    lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                    lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k];
                }
                d[k - 1] = bb;
                if k > 2 {
                    k -= 1;
                }
            } else {
                for l in (1..k - 1).rev() {
                    redi(b, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_short_vector() {
        // lattice containing (1, 2, 3) hidden by a unimodular transform
        let m = BigInt::from(1_000_003);
        let mut b = vec![
            vec![m.clone(), BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(0), m.clone(), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
        ];
        b[0] = b[0].iter().zip(&b[2]).map(|(x, y)| x + y * 17).collect();
        lll_reduce(&mut b);
        let short: BigInt = b.iter().map(|v| dot(v, v)).min().unwrap();
        assert_eq!(short, BigInt::from(14));
    }
}
