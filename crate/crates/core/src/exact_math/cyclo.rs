//! Exact elements of cyclotomic fields.
//!
//! A value is stored at a conductor `n` (never congruent to 2 mod 4) as
//! rational coordinates in the power basis `1, z, ..., z^(phi(n)-1)` of
//! `Q(z_n)`. Values of different conductors are combined in the field of the
//! least common multiple.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

type Q = BigRational;

pub(crate) struct Table {
    pub phi: usize,
    /// `powers[e]` holds the coordinates of `z^e` for `0 <= e < n`.
    pub powers: Vec<Vec<i64>>,
}

fn tables() -> &'static RwLock<HashMap<u32, Arc<Table>>> {
    static T: OnceLock<RwLock<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn table(n: u32) -> Arc<Table> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return t.clone();
    }
    let poly = cyclotomic_poly(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by z and reduce with the monic cyclotomic polynomial
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] = cur[i]
                    .checked_sub(top.checked_mul(poly[i]).expect("cyclotomic table overflow"))
                    .expect("cyclotomic table overflow");
            }
        }
    }
    let t = Arc::new(Table { phi, powers });
    tables().write().unwrap().insert(n, t.clone());
    t
}

pub fn euler_phi(mut n: u32) -> usize {
    let mut r = n as usize;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            r -= r / p as usize;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n as usize;
    }
    r
}

pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = rem[i + db];
        q[i] = c;
        for j in 0..=db {
            rem[i + j] -= c * b[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn normal_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Vec<Q>,
}

impl Cyclo {
    pub fn from_rational(q: Q) -> Self {
        Cyclo { n: 1, c: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Q::from_integer(BigInt::from(k)))
    }

    /// Builds a value from power-basis coordinates at conductor `n`.
    /// Coordinates beyond `phi(n)` are folded in through `z^n = 1`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Q>) -> Self {
        assert!(n >= 1);
        let mut acc = Cyclo::zero();
        for (k, q) in coeffs.into_iter().enumerate() {
            if !q.is_zero() {
                acc += &(Cyclo::root_of_unity(n, k as i64).scale(&q));
            }
        }
        acc
    }

    /// `z_n^k` where `z_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order zero");
        let m = n as i64;
        let k = k.rem_euclid(m);
        let g = k.gcd(&m).max(1);
        let (mut n2, mut k2) = ((m / g) as u32, k / g);
        if k == 0 {
            n2 = 1;
            k2 = 0;
        }
        let mut sign = 1i64;
        if n2 % 4 == 2 {
            let half = n2 / 2;
            k2 = ((k2 + half as i64) / 2) % half as i64;
            n2 = half;
            sign = -1;
        }
        if n2 == 1 {
            return Cyclo::from_int(sign);
        }
        let t = table(n2);
        let c = t.powers[k2 as usize].iter().map(|&v| Q::from_integer(BigInt::from(v * sign))).collect();
        Cyclo { n: n2, c }.normalized()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.n == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    fn normalized(mut self) -> Self {
        if self.n > 1 && self.c[1..].iter().all(|q| q.is_zero()) {
            self.c.truncate(1);
            self.n = 1;
        }
        self
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Cyclo::zero();
        }
        Cyclo { n: self.n, c: self.c.iter().map(|x| x * q).collect() }
    }

    /// Coordinates at a conductor `m` that is a multiple of the current one.
    pub fn lift(&self, m: u32) -> Vec<Q> {
        let m = normal_conductor(m);
        assert!(m % self.n == 0, "conductor {} does not divide {}", self.n, m);
        if m == self.n {
            return self.c.clone();
        }
        let t = table(m);
        let step = (m / self.n) as usize;
        let mut out = vec![Q::zero(); t.phi];
        for (i, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let row = &t.powers[(i * step) % m as usize];
            for (o, &v) in out.iter_mut().zip(row) {
                if v != 0 {
                    *o += q * Q::from_integer(BigInt::from(v));
                }
            }
        }
        out
    }

    fn at(&self, m: u32) -> Cyclo {
        if m == self.n {
            self.clone()
        } else {
            Cyclo { n: m, c: self.lift(m) }
        }
    }

    pub(crate) fn mul_impl(&self, rhs: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        let m = lcm(self.n, rhs.n);
        let a = self.at(m);
        let b = rhs.at(m);
        let t = table(m);
        let phi = t.phi;
        let mut prod = vec![Q::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out = vec![Q::zero(); phi];
        for (e, q) in prod.into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if e < phi {
                out[e] += q;
                continue;
            }
            let row = &t.powers[e % m as usize];
            for (o, &v) in out.iter_mut().zip(row) {
                if v != 0 {
                    *o += &q * Q::from_integer(BigInt::from(v));
                }
            }
        }
        Cyclo { n: m, c: out }.normalized()
    }

    /// Matrix of multiplication by `self` on the power basis at conductor `m`.
    fn mul_matrix(&self, m: u32) -> Vec<Vec<Q>> {
        let phi = table(m).phi;
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            cols.push(self.mul_impl(&Cyclo::root_of_unity(m, j as i64)).lift(m));
        }
        (0..phi).map(|i| (0..phi).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            return if q.is_zero() { None } else { Some(Cyclo::from_rational(q.recip())) };
        }
        let m = self.n;
        let a = self.mul_matrix(m);
        let mut b = vec![Q::zero(); a.len()];
        b[0] = Q::one();
        solve_rational(a, b).map(|c| Cyclo { n: m, c }.normalized())
    }

    /// Image under the automorphism `z -> z^a` (`a` coprime to the conductor).
    pub fn galois(&self, a: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let mut acc = Cyclo::zero();
        for (i, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                acc += &Cyclo::root_of_unity(self.n, a * i as i64).scale(q);
            }
        }
        acc
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    fn in_subfield(&self, m: u32) -> Option<Vec<Q>> {
        let phi_m = table(m).phi;
        let cols: Vec<Vec<Q>> = (0..phi_m).map(|i| Cyclo::root_of_unity(m, i as i64).lift(self.n)).collect();
        let rows = self.c.len();
        let a: Vec<Vec<Q>> = (0..rows).map(|r| (0..phi_m).map(|j| cols[j][r].clone()).collect()).collect();
        solve_rational(a, self.c.clone())
    }

    /// The same value stored at its smallest possible conductor.
    pub fn shrink(&self) -> Self {
        let mut cur = self.clone();
        'outer: loop {
            if cur.n == 1 {
                return cur;
            }
            for p in prime_factors(cur.n) {
                let m = normal_conductor(cur.n / p);
                if let Some(c) = cur.in_subfield(m) {
                    cur = Cyclo { n: m, c }.normalized();
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    pub fn min_conductor(&self) -> u32 {
        self.shrink().n
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let a = self.shrink();
        let b = other.shrink();
        a.n.cmp(&b.n).then_with(|| a.c.cmp(&b.c))
    }

    /// Numerical value under the embedding `z_n -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, q) in self.c.iter().enumerate() {
            let v = rational_to_f64(q);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

pub(crate) fn rational_to_f64(q: &Q) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Solves a square or overdetermined rational system, `None` if inconsistent
/// or if the solution is not unique.
pub(crate) fn solve_rational(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    let mut piv = Vec::new();
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][col].recip();
        for j in col..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
                let t = &f * &b[r];
                b[i] -= t;
            }
        }
        piv.push(col);
        r += 1;
    }
    if b[r..].iter().any(|x| !x.is_zero()) || piv.len() != cols {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let m = lcm(self.n, other.n);
        self.lift(m) == other.lift(m)
    }
}

impl Eq for Cyclo {}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::from_rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::from_rational(Q::one())
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<'a> AddAssign<&'a Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &'a Cyclo) {
        if rhs.is_zero() {
            return;
        }
        if self.n == rhs.n {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                *a += b;
            }
        } else {
            let m = lcm(self.n, rhs.n);
            let mut a = self.lift(m);
            for (x, y) in a.iter_mut().zip(rhs.lift(m)) {
                *x += y;
            }
            self.n = m;
            self.c = a;
        }
        let taken = std::mem::replace(self, Cyclo::zero());
        *self = taken.normalized();
    }
}

impl<'a> SubAssign<&'a Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &'a Cyclo) {
        *self += &(-rhs.clone());
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(mut self, rhs: Cyclo) -> Cyclo {
        self += &rhs;
        self
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(mut self, rhs: Cyclo) -> Cyclo {
        self -= &rhs;
        self
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_impl(&rhs)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text form: terms `q*zN^k` in increasing `k` at the minimal
/// conductor, the constant term printed as a bare rational.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shrink();
        let mut first = true;
        for (k, q) in s.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*z{}^{k}", s.n)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<Q, Error> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

fn parse_root(s: &str) -> Result<Cyclo, Error> {
    let bad = || Error::Parse(format!("bad root of unity `{s}`"));
    let body = s.strip_prefix('z').ok_or_else(bad)?;
    let (n, k) = match body.split_once('^') {
        Some((n, k)) => (n, k),
        None => (body, "1"),
    };
    let n: u32 = n.parse().map_err(|_| bad())?;
    let k: i64 = k.parse().map_err(|_| bad())?;
    if n == 0 || k < 0 {
        return Err(bad());
    }
    Ok(Cyclo::root_of_unity(n, k))
}

impl FromStr for Cyclo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Cyclo::zero();
        for t in terms {
            let (neg, body) = match t.as_bytes()[0] {
                b'-' => (true, &t[1..]),
                b'+' => (false, &t[1..]),
                _ => (false, t),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let term = match body.split_once('*') {
                Some((q, z)) => parse_root(z)?.scale(&parse_rational(q)?),
                None if body.starts_with('z') => parse_root(body)?,
                None => Cyclo::from_rational(parse_rational(body)?),
            };
            if neg {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn roots_multiply_like_exponents() {
        for n in [3u32, 4, 5, 6, 8, 12, 15] {
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    assert_eq!(z(n, a) * z(n, b), z(n, a + b), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in 2..20u32 {
            let mut s = Cyclo::zero();
            for k in 0..n as i64 {
                s += &z(n, k);
            }
            assert!(s.is_zero(), "n={n}");
        }
    }

    #[test]
    fn mixed_conductors_and_shrink() {
        let a = z(3, 1) * z(5, 1);
        assert_eq!(a, z(15, 8));
        assert_eq!((a.clone() * z(5, 4)).shrink().conductor(), 3);
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(2, 1), Cyclo::from_int(-1));
    }

    #[test]
    fn text_round_trip() {
        let x: Cyclo = "1/2*z8^1 - 1/2*z8^3".parse().unwrap();
        assert_eq!(x.to_string(), "1/2*z8^1 - 1/2*z8^3");
        assert_eq!(x.clone() * x.clone(), Cyclo::from_rational(Q::new(1.into(), 2.into())));
        let y: Cyclo = "-3/4 + z15^2".parse().unwrap();
        assert_eq!(y.to_string().parse::<Cyclo>().unwrap(), y);
        assert_eq!("7".parse::<Cyclo>().unwrap().to_string(), "7");
        assert!("1/0".parse::<Cyclo>().is_err());
        assert!("z0^1".parse::<Cyclo>().is_err());
    }

    #[test]
    fn inverse_of_sums() {
        let x = Cyclo::from_int(2) + z(7, 1) + z(7, 3);
        let y = x.inverse().unwrap();
        assert_eq!(x * y, Cyclo::one());
    }
}
