//! Coefficient fields.
//!
//! All structural operations and tests run over exact rationals; the `f64`
//! implementation exists for the benchmark path, where rounding is
//! irrelevant and speed matters.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Relative tolerance used by [`Scalar::approx_eq`] in float mode.
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-12;

/// A coefficient field element.
///
/// The trait is deliberately method-based rather than operator-based so that
/// generic code can work by reference without cloning big integers.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// `num/den`; `None` when `den == 0`.
    fn from_fraction(num: i64, den: i64) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `None` when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    /// Exact equality for exact fields, relative comparison for floats.
    fn approx_eq(&self, rhs: &Self) -> bool;
}

/// Arbitrary-precision rational number, the default coefficient field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The sign as `-1`, `0` or `+1`.
    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_int(n: i64) -> Self {
        Rational::from(n)
    }

    fn from_fraction(num: i64, den: i64) -> Option<Self> {
        Rational::new(num, den)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    fn approx_eq(&self, rhs: &Self) -> bool {
        self == rhs
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_fraction(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            None
        } else {
            Some(num as f64 / den as f64)
        }
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0.0 {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn neg(&self) -> Self {
        -self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn approx_eq(&self, rhs: &Self) -> bool {
        if self == rhs {
            return true;
        }
        let scale = f64::max(f64::abs(*self), f64::abs(*rhs));
        f64::abs(self - rhs) <= FLOAT_RELATIVE_TOLERANCE * scale
    }
}
