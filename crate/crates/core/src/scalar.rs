//! Arithmetic backends.
//!
//! Every game-theoretic computation in this crate is generic over a
//! [`Scalar`]. Two backends ship: `f64` for the attribution pipeline and
//! [`BigRational`] for exact verification, where equality checks carry no
//! floating-point slack at all.

use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + 'static
{
    /// Builds the exact value `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }

    fn abs(&self) -> Self;

    fn to_f64(&self) -> f64;

    /// Comparison slack used when no explicit tolerance is supplied.
    /// Zero for exact backends.
    fn default_tolerance() -> Self;

    /// True when comparisons at zero tolerance are meaningful.
    fn is_exact() -> bool;
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    /// 1e-9 unless overridden by the `SCGT_TOLERANCE` environment
    /// variable, read once per process.
    fn default_tolerance() -> Self {
        static TOLERANCE: std::sync::OnceLock<f64> = std::sync::OnceLock::new();
        *TOLERANCE.get_or_init(|| {
            std::env::var("SCGT_TOLERANCE")
                .ok()
                .and_then(|raw| raw.parse().ok())
                .unwrap_or(1e-9)
        })
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn default_tolerance() -> Self {
        BigRational::zero()
    }

    fn is_exact() -> bool {
        true
    }
}

/// `|a - b| <= tol`
pub fn approx_eq<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    (a.clone() - b.clone()).abs() <= *tol
}

/// `a <= b + tol`
pub fn approx_le<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    a.clone() - b.clone() <= *tol
}

pub fn sum<S: Scalar>(values: impl IntoIterator<Item = S>) -> S {
    values.into_iter().fold(S::zero(), |acc, v| acc + v)
}
