//! Scalar backends.
//!
//! Every routine in the crate is generic over [`Scalar`]. Two backends are
//! provided:
//!
//! * [`Exact`]: arbitrary-precision rationals. Equality is decidable, so
//!   the solvability and case tests of the zero-divisor theory are reliable.
//! * [`Approx`]: `f64` carrying an absolute tolerance. Two values compare
//!   equal when they differ by at most the tolerance, and a value is zero
//!   when its magnitude is at most the tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default absolute tolerance of the [`Approx`] backend.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Arbitrary-precision rational scalar.
pub type Exact = BigRational;

/// A real field element as used by split-quaternion coefficients.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` for backends whose arithmetic and equality are exact.
    const EXACT: bool;
    /// Short backend name, used in reports.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn to_f64(&self) -> f64;
    fn to_approx(&self) -> Approx {
        Approx::new(self.to_f64())
    }

    fn is_zero(&self) -> bool;

    /// Sign of the value; values within tolerance of zero report `Equal`.
    fn sign(&self) -> Ordering;

    /// Non-negative square root, when it exists in this backend.
    ///
    /// Negative inputs yield `None`. On [`Exact`] only perfect rational
    /// squares have a root.
    fn sqrt(&self) -> Option<Self>;

    /// `true` when the value is nonzero but close enough to the zero
    /// threshold that a branch on `is_zero` is numerically fragile.
    fn is_marginal(&self) -> bool {
        false
    }

    fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn sign(&self) -> Ordering {
        if Signed::is_negative(self) {
            Ordering::Less
        } else if Zero::is_zero(self) {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let num = exact_isqrt(self.numer())?;
        let den = exact_isqrt(self.denom())?;
        Some(BigRational::new(num, den))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Floating-point scalar with an absolute comparison tolerance.
///
/// The tolerance travels with the value. Results of binary operations
/// inherit the larger tolerance of their operands; values built without an
/// explicit tolerance (`from_i64`, `new`) defer to whichever operand has one,
/// and fall back to [`DEFAULT_EPS`].
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    value: f64,
    // 0.0 means "not set"
    eps: f64,
}

impl Approx {
    pub fn new(value: f64) -> Self {
        Approx { value, eps: 0.0 }
    }

    pub fn with_eps(value: f64, eps: f64) -> Self {
        assert!(eps > 0.0 && eps.is_finite(), "tolerance must be positive");
        Approx { value, eps }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    /// Tolerance in effect for this value.
    pub fn eps(self) -> f64 {
        if self.eps > 0.0 {
            self.eps
        } else {
            DEFAULT_EPS
        }
    }

    fn lift(self, value: f64, other: Approx) -> Approx {
        Approx {
            value,
            eps: self.eps.max(other.eps),
        }
    }
}

impl From<f64> for Approx {
    fn from(value: f64) -> Self {
        Approx::new(value)
    }
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        let eps = self.eps.max(other.eps);
        let eps = if eps > 0.0 { eps } else { DEFAULT_EPS };
        (self.value - other.value).abs() <= eps
    }
}

macro_rules! approx_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $method(self, rhs: Approx) -> Approx {
                self.lift(self.value $op rhs.value, rhs)
            }
        }
    };
}

approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);
approx_binop!(Div, div, /);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx {
            value: -self.value,
            eps: self.eps,
        }
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "{}", self.value)
        } else {
            f.write_str(&format_significant(self.value, 12))
        }
    }
}

impl Scalar for Approx {
    const EXACT: bool = false;
    const NAME: &'static str = "approx";

    fn zero() -> Self {
        Approx::new(0.0)
    }

    fn one() -> Self {
        Approx::new(1.0)
    }

    fn from_i64(n: i64) -> Self {
        Approx::new(n as f64)
    }

    fn from_rational(r: &BigRational) -> Self {
        Approx::new(Scalar::to_f64(r))
    }

    fn to_f64(&self) -> f64 {
        self.value
    }

    fn to_approx(&self) -> Approx {
        *self
    }

    fn is_zero(&self) -> bool {
        self.value.abs() <= self.eps()
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.value < 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn sqrt(&self) -> Option<Self> {
        match self.sign() {
            Ordering::Less => None,
            Ordering::Equal => Some(Approx {
                value: 0.0,
                ..*self
            }),
            Ordering::Greater => Some(Approx {
                value: self.value.sqrt(),
                ..*self
            }),
        }
    }

    fn is_marginal(&self) -> bool {
        let m = self.value.abs();
        m > self.eps() && m <= 100.0 * self.eps()
    }
}

/// Formats `v` with `digits` significant digits in plain positional
/// notation, trimming trailing zeros.
pub fn format_significant(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_owned();
    }
    let magnitude = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{:.*}", decimals, v);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_owned();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn exact_sqrt_of_perfect_squares() {
        assert_eq!(Scalar::sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(Scalar::sqrt(&q(0, 1)), Some(q(0, 1)));
        assert_eq!(Scalar::sqrt(&q(7, 1)), None);
        assert_eq!(Scalar::sqrt(&q(-4, 1)), None);
    }

    #[test]
    fn exact_display_is_fraction() {
        assert_eq!(q(-1, 2).to_string(), "-1/2");
        assert_eq!(q(6, 3).to_string(), "2");
    }

    #[test]
    fn approx_equality_within_tolerance() {
        assert_eq!(Approx::new(1.0), Approx::new(1.0 + 5e-10));
        assert_ne!(Approx::new(1.0), Approx::new(1.0 + 5e-9));
        let loose = Approx::with_eps(1.0, 1e-3);
        assert_eq!(loose, Approx::new(1.0005));
        // tolerance propagates through arithmetic
        let d = loose - Approx::new(1.0009);
        assert!(Scalar::is_zero(&d));
    }

    #[test]
    fn approx_marginal_band() {
        assert!(!Approx::new(5e-10).is_marginal());
        assert!(Approx::new(5e-8).is_marginal());
        assert!(!Approx::new(5e-6).is_marginal());
    }

    #[test]
    fn alternate_display_round_trips() {
        let v = 2f64.sqrt() * 1e6;
        assert_eq!(format!("{:#}", Approx::new(v)).parse::<f64>().unwrap(), v);
        assert_eq!(
            format!("{:#}", Approx::new(1e-20)),
            "0.00000000000000000001"
        );
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_significant(2f64.sqrt(), 12), "1.41421356237");
        assert_eq!(format_significant(-0.5, 12), "-0.5");
        assert_eq!(format_significant(1234.0, 12), "1234");
        assert_eq!(format_significant(1e-3 / 3.0, 12), "0.000333333333333");
    }
}
