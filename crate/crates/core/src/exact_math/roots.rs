//! Exact roots of polynomials in a cyclotomic field.
//!
//! Roots are found modulo a prime that splits completely in the field, lifted
//! p-adically, and recovered as integer coordinates by lattice reduction.
//! Every candidate is checked by exact evaluation before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::{cyclotomic_poly, euler_phi, prime_factors, Cyclo};
use super::lll::lll_reduce;
use super::poly;
use super::scalar::Scalar;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- polynomials over F_p, lowest degree first ----

fn ptrim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    ptrim(out)
}

fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = ptrim(b.to_vec());
    let mut r = ptrim(a.to_vec());
    let inv = invmod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = mulmod(*r.last().unwrap(), inv, p);
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, bj, p)) % p;
        }
        r = ptrim(r);
    }
    r
}

fn pdiv(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = ptrim(b.to_vec());
    let mut r = ptrim(a.to_vec());
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![0u64; r.len() - b.len() + 1];
    let inv = invmod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = mulmod(*r.last().unwrap(), inv, p);
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, bj, p)) % p;
        }
        r.pop();
        r = ptrim(r);
    }
    ptrim(q)
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = ptrim(a.to_vec());
    let mut b = ptrim(b.to_vec());
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = invmod(l, p);
        a = a.iter().map(|&c| mulmod(c, inv, p)).collect();
    }
    a
}

fn ppowmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = prem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = prem(&pmul(&r, &b, p), m, p);
        }
        b = prem(&pmul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

fn pderiv(a: &[u64], p: u64) -> Vec<u64> {
    ptrim(a.iter().enumerate().skip(1).map(|(k, &c)| mulmod(k as u64 % p, c, p)).collect())
}

/// All roots in F_p of a squarefree polynomial.
fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    let x = vec![0, 1];
    let xp = ppowmod(&x, p, f, p);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    let h = pgcd(f, &ptrim(xp_minus_x), p);
    let mut out = Vec::new();
    let mut seed = 7u64;
    split_linear(&h, p, &mut seed, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(h: &[u64], p: u64, seed: &mut u64, out: &mut Vec<u64>) {
    let deg = h.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        // h = h0 + x
        out.push((p - h[0]) % p);
        return;
    }
    loop {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let delta = (*seed >> 11) % p;
        let mut t = ppowmod(&[delta, 1], (p - 1) / 2, h, p);
        if t.is_empty() {
            t = vec![0];
        }
        t[0] = (t[0] + p - 1) % p;
        let g = pgcd(h, &ptrim(t), p);
        let dg = g.len().saturating_sub(1);
        if dg > 0 && dg < deg {
            let other = pdiv(h, &g, p);
            split_linear(&g, p, seed, out);
            split_linear(&other, p, seed, out);
            return;
        }
    }
}

// ---- p-adic lifting ----

fn big_mod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn big_inv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not a unit in p-adic lifting");
    big_mod(&e.x, m)
}

fn big_eval(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = big_mod(&(acc * x + c), m);
    }
    acc
}

fn big_deriv(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

fn newton_lift(coeffs: &[BigInt], r0: u64, modulus: &BigInt, steps: u32) -> BigInt {
    let d = big_deriv(coeffs);
    let mut r = BigInt::from(r0);
    for _ in 0..steps {
        let fx = big_eval(coeffs, &r, modulus);
        let dx = big_eval(&d, &r, modulus);
        r = big_mod(&(r - fx * big_inv(&dx, modulus)), modulus);
    }
    r
}

struct PrimeData {
    p: u64,
    omega: u64,
}

fn choose_prime(m: u32, start_after: u64) -> PrimeData {
    let m64 = m as u64;
    let mut t = start_after / m64 + 1;
    loop {
        let p = m64 * t + 1;
        t += 1;
        if !is_prime(p) {
            continue;
        }
        if m == 1 {
            return PrimeData { p, omega: 1 };
        }
        let primes = prime_factors(m);
        for a in 2..p {
            let w = powmod(a, (p - 1) / m64, p);
            if primes.iter().all(|&q| powmod(w, m64 / q as u64, p) != 1) {
                return PrimeData { p, omega: w };
            }
        }
    }
}

fn bits(x: &BigInt) -> u64 {
    x.bits()
}

/// Roots of `f` lying in `Q(z_m)`, sorted canonically and without repeats.
/// The conductor is enlarged to cover the coefficients.
pub fn roots_in_cyclotomic_field(f: &[Cyclo], m: u32) -> Vec<Cyclo> {
    let f = poly::trim(f.to_vec());
    let Some(deg) = poly::degree(&f) else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let mut m = f.iter().fold(m.max(1), |acc, c| acc.lcm(&c.min_conductor()));
    if m % 4 == 2 {
        m /= 2;
    }
    let f = poly::squarefree(&f);
    let d = f.len() - 1;
    if d == 1 {
        return vec![-f[0].clone()];
    }
    let phi = euler_phi(m);

    // integral model g(y) = D^d f(y / D)
    let coords: Vec<Vec<BigRational>> = f.iter().map(|c| c.lift(m)).collect();
    let mut den = BigInt::one();
    for row in &coords {
        for q in row {
            den = den.lcm(q.denom());
        }
    }
    let g: Vec<Vec<BigInt>> = coords
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let scale = num_traits::pow(den.clone(), d - k);
            row.iter().map(|q| (q * BigRational::from_integer(scale.clone())).to_integer()).collect()
        })
        .collect();

    // size bound for the integer coordinates of a root of g
    let mut height = BigInt::zero();
    for row in &g[..d] {
        let s: BigInt = row.iter().map(|x| x.abs()).sum();
        height = height.max(s);
    }
    let coord_bound_bits = bits(&(height + 1u32)) + phi as u64 + bits(&BigInt::from(phi)) + 1;
    let target_bits = (phi as u64 + 1) * (coord_bound_bits + phi as u64 + 2) + 16;

    let mut prime_floor = 1u64 << 20;
    let pd = loop {
        let pd = choose_prime(m, prime_floor);
        prime_floor = pd.p;
        let red: Vec<u64> = g
            .iter()
            .map(|row| {
                let mut acc = 0u64;
                let mut w = 1u64;
                for c in row {
                    let cm = big_mod(c, &BigInt::from(pd.p)).to_u64().unwrap();
                    acc = (acc + mulmod(cm, w, pd.p)) % pd.p;
                    w = mulmod(w, pd.omega, pd.p);
                }
                acc
            })
            .collect();
        let red = ptrim(red);
        if red.len() != d + 1 {
            continue;
        }
        if pgcd(&red, &pderiv(&red, pd.p), pd.p).len() == 1 {
            break (pd, red);
        }
    };
    let (pd, red) = pd;
    let residues = roots_mod_p(&red, pd.p);

    let mut found: Vec<Cyclo> = Vec::new();
    let mut extra_bits = 0u64;
    let mut pending = residues;
    for _attempt in 0..3 {
        if pending.is_empty() {
            break;
        }
        let log_p = 64 - pd.p.leading_zeros() as u64 - 1;
        let k = (target_bits + extra_bits) / log_p + 1;
        let modulus = num_traits::pow(BigInt::from(pd.p), k as usize);
        let steps = 64 - (k.leading_zeros()) + 1;
        let phi_m: Vec<BigInt> = cyclotomic_poly(m).into_iter().map(BigInt::from).collect();
        let omega = if m == 1 { BigInt::one() } else { newton_lift(&phi_m, pd.omega, &modulus, steps) };
        let mut omega_pows = vec![BigInt::one()];
        for i in 1..phi {
            let next = big_mod(&(&omega_pows[i - 1] * &omega), &modulus);
            omega_pows.push(next);
        }
        let lifted: Vec<BigInt> = g
            .iter()
            .map(|row| {
                let s: BigInt = row.iter().zip(&omega_pows).map(|(c, w)| c * w).sum();
                big_mod(&s, &modulus)
            })
            .collect();
        let mut still = Vec::new();
        for &r0 in &pending {
            let r = newton_lift(&lifted, r0, &modulus, steps);
            match reconstruct(&r, &omega_pows, &modulus, phi, m, &den, &f) {
                Some(c) => found.push(c),
                None => still.push(r0),
            }
        }
        pending = still;
        extra_bits += target_bits;
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    found.dedup();
    found
}

fn reconstruct(
    r: &BigInt,
    omega_pows: &[BigInt],
    modulus: &BigInt,
    phi: usize,
    m: u32,
    den: &BigInt,
    f: &[Cyclo],
) -> Option<Cyclo> {
    let dim = phi + 1;
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    let mut b0 = vec![BigInt::zero(); dim];
    b0[0] = modulus.clone();
    basis.push(b0);
    for i in 1..phi {
        let mut v = vec![BigInt::zero(); dim];
        v[0] = big_mod(&(-&omega_pows[i]), modulus);
        v[i] = BigInt::one();
        basis.push(v);
    }
    let mut t = vec![BigInt::zero(); dim];
    t[0] = r.clone();
    t[phi] = BigInt::one();
    basis.push(t);
    lll_reduce(&mut basis);
    let inv_den = BigRational::new(BigInt::one(), den.clone());
    for row in &basis {
        let sign = if row[phi] == BigInt::one() {
            BigInt::one()
        } else if row[phi] == -BigInt::one() {
            -BigInt::one()
        } else {
            continue;
        };
        let coeffs: Vec<BigRational> =
            row[..phi].iter().map(|c| BigRational::from_integer(c * &sign) * &inv_den).collect();
        let cand = Cyclo::from_coeffs(m, coeffs);
        if poly::eval(f, &cand).is_zero() {
            return Some(cand);
        }
    }
    None
}

/// Roots of a polynomial over any scalar field, restricted to values that
/// live in both `Q(z_m)` and the field itself.
pub fn roots_in_field<F: Scalar>(f: &[F], m: u32) -> Vec<F> {
    let fc: Vec<Cyclo> = f.iter().map(|c| c.to_cyclo()).collect();
    roots_in_cyclotomic_field(&fc, m).iter().filter_map(F::from_cyclo).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    fn poly_from_roots(rs: &[Cyclo]) -> Vec<Cyclo> {
        let mut p = vec![Cyclo::one()];
        for r in rs {
            let mut q = vec![Cyclo::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                q[i + 1] += c;
                q[i] -= &c.mul_ref(r);
            }
            p = q;
        }
        p
    }

    #[test]
    fn rational_roots() {
        let rs: Vec<Cyclo> = [3, -7, 0].iter().map(|&k| Cyclo::from_int(k)).collect();
        let mut half = Cyclo::from_int(1);
        half = half.scale(&BigRational::new(5.into(), 2.into()));
        let mut all = rs.clone();
        all.push(half);
        let got = roots_in_cyclotomic_field(&poly_from_roots(&all), 1);
        assert_eq!(got.len(), 4);
        for r in &all {
            assert!(got.contains(r));
        }
    }

    #[test]
    fn roots_of_unity_of_order_15() {
        let mut p = vec![Cyclo::zero(); 16];
        p[0] = Cyclo::from_int(-1);
        p[15] = Cyclo::one();
        let got = roots_in_cyclotomic_field(&p, 15);
        assert_eq!(got.len(), 15);
        for k in 0..15 {
            assert!(got.contains(&z(15, k)));
        }
        // over Q(z_3) only the cube roots are found
        assert_eq!(roots_in_cyclotomic_field(&p, 3).len(), 3);
    }

    #[test]
    fn messy_field_elements() {
        let a = Cyclo::from_int(3) + z(7, 2).scale(&BigRational::new((-5).into(), 3.into()));
        let b = z(7, 1) + z(7, 3) + z(7, 5).scale(&BigRational::new(11.into(), 1.into()));
        let c = Cyclo::from_int(-4);
        let got = roots_in_cyclotomic_field(&poly_from_roots(&[a.clone(), b.clone(), c.clone()]), 7);
        assert_eq!(got.len(), 3);
        assert!(got.contains(&a) && got.contains(&b) && got.contains(&c));
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        let p = vec![Cyclo::from_int(-2), Cyclo::zero(), Cyclo::one()];
        assert!(roots_in_cyclotomic_field(&p, 1).is_empty());
        // sqrt(2) lives in Q(z_8)
        assert_eq!(roots_in_cyclotomic_field(&p, 8).len(), 2);
    }
}
