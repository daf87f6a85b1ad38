use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::Cyclo;
use crate::error::{Error, Result};

/// An exact field of characteristic zero that embeds into some cyclotomic field.
///
/// Every algorithm in the crate is written against this trait. Zero tests are
/// exact, so floating point types are deliberately not implementors.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn to_cyclo(&self) -> Cyclo;

    /// Converts back from a cyclotomic number, `None` when the value does not
    /// live in this field.
    fn from_cyclo(c: &Cyclo) -> Option<Self>;

    fn root_of_unity(n: u32, k: i64) -> Option<Self> {
        Self::from_cyclo(&Cyclo::root_of_unity(n, k))
    }

    /// Conductor of the smallest cyclotomic field holding the value.
    fn conductor(&self) -> u32 {
        self.to_cyclo().min_conductor()
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += &a.mul_ref(b);
    }

    /// Total order used only to make outputs deterministic.
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.to_cyclo().canonical_cmp(&other.to_cyclo())
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let c: Cyclo = s.parse()?;
        Self::from_cyclo(&c).ok_or_else(|| Error::Parse(format!("scalar `{s}` is outside the coefficient field")))
    }

    fn to_text(&self) -> String {
        self.to_cyclo().to_string()
    }
}

/// Exact rationals.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }

    fn to_cyclo(&self) -> Cyclo {
        Cyclo::from_rational(self.clone())
    }

    fn from_cyclo(c: &Cyclo) -> Option<Self> {
        c.as_rational().cloned()
    }

    fn conductor(&self) -> u32 {
        1
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl Scalar for Cyclo {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }

    fn inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Cyclo::from_rational(rat(num, den))
    }

    fn to_cyclo(&self) -> Cyclo {
        self.clone()
    }

    fn from_cyclo(c: &Cyclo) -> Option<Self> {
        Some(c.clone())
    }
}
