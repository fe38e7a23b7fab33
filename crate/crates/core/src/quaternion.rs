//! The split-quaternion value type.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Approx, Scalar};

/// A split quaternion `q0 + q1·i + q2·j + q3·k` with
/// `i² = -1`, `j² = k² = 1`, `ij = k = -ji`, `jk = -i = -kj`, `ki = j = -ik`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitQuaternion<S> {
    q0: S,
    q1: S,
    q2: S,
    q3: S,
}

/// Causal character of a split quaternion, read off the sign of `I(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Lightlike,
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CausalClass::Spacelike => "spacelike",
            CausalClass::Timelike => "timelike",
            CausalClass::Lightlike => "lightlike",
        })
    }
}

/// A complex number `re + im·i` over a scalar backend.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> Complex<S> {
    pub fn new(re: S, im: S) -> Self {
        Complex { re, im }
    }

    pub fn real(re: S) -> Self {
        Complex { re, im: S::zero() }
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> S {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Complex::new(
            self.re.clone() * other.re.clone() - self.im.clone() * other.im.clone(),
            self.re.clone() * other.im.clone() + self.im.clone() * other.re.clone(),
        )
    }

    /// Quotient `self / other`; `other` must be nonzero.
    pub fn div(&self, other: &Self) -> Self {
        let n = other.norm_sq();
        let p = self.mul(&other.conj());
        Complex::new(p.re / n.clone(), p.im / n)
    }

    /// Embeds the complex number as the split quaternion `re + im·i`.
    pub fn to_quaternion(&self) -> SplitQuaternion<S> {
        SplitQuaternion::new(self.re.clone(), self.im.clone(), S::zero(), S::zero())
    }
}

/// The decomposition `q = z1 + z2·j` with `z1 = q0 + q1·i`, `z2 = q2 + q3·i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPair<S> {
    pub z1: Complex<S>,
    pub z2: Complex<S>,
}

impl<S: Scalar> SplitQuaternion<S> {
    pub fn new(q0: S, q1: S, q2: S, q3: S) -> Self {
        SplitQuaternion { q0, q1, q2, q3 }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        SplitQuaternion::new(
            S::from_i64(q0),
            S::from_i64(q1),
            S::from_i64(q2),
            S::from_i64(q3),
        )
    }

    pub fn from_real(r: S) -> Self {
        SplitQuaternion::new(r, S::zero(), S::zero(), S::zero())
    }

    pub fn from_array([q0, q1, q2, q3]: [S; 4]) -> Self {
        SplitQuaternion::new(q0, q1, q2, q3)
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// The four basis units `1, i, j, k`.
    pub fn basis() -> [Self; 4] {
        [Self::one(), Self::i(), Self::j(), Self::k()]
    }

    pub fn q0(&self) -> &S {
        &self.q0
    }

    pub fn q1(&self) -> &S {
        &self.q1
    }

    pub fn q2(&self) -> &S {
        &self.q2
    }

    pub fn q3(&self) -> &S {
        &self.q3
    }

    /// Coefficient vector `(q0, q1, q2, q3)`.
    pub fn to_array(&self) -> [S; 4] {
        [
            self.q0.clone(),
            self.q1.clone(),
            self.q2.clone(),
            self.q3.clone(),
        ]
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> SplitQuaternion<T> {
        SplitQuaternion {
            q0: f(&self.q0),
            q1: f(&self.q1),
            q2: f(&self.q2),
            q3: f(&self.q3),
        }
    }

    pub fn to_approx(&self) -> SplitQuaternion<Approx> {
        self.map(Scalar::to_approx)
    }

    /// `q̄ = q0 - q1·i - q2·j - q3·k`
    pub fn conjugate(&self) -> Self {
        SplitQuaternion::new(
            self.q0.clone(),
            -self.q1.clone(),
            -self.q2.clone(),
            -self.q3.clone(),
        )
    }

    /// `q' = q0 - q1·i + q2·j + q3·k`
    pub fn prime(&self) -> Self {
        SplitQuaternion::new(
            self.q0.clone(),
            -self.q1.clone(),
            self.q2.clone(),
            self.q3.clone(),
        )
    }

    pub fn re(&self) -> S {
        self.q0.clone()
    }

    pub fn im(&self) -> Self {
        SplitQuaternion::new(S::zero(), self.q1.clone(), self.q2.clone(), self.q3.clone())
    }

    /// The quadratic form `I(q) = q q̄ = q0² + q1² - q2² - q3²`.
    pub fn i_norm(&self) -> S {
        sq(&self.q0) + sq(&self.q1) - sq(&self.q2) - sq(&self.q3)
    }

    /// `K(q) = Im(q)² = -q1² + q2² + q3²`.
    pub fn k_form(&self) -> S {
        -sq(&self.q1) + sq(&self.q2) + sq(&self.q3)
    }

    /// Euclidean square of the imaginary part, `q1² + q2² + q3²`.
    pub fn im_norm_sq(&self) -> S {
        sq(&self.q1) + sq(&self.q2) + sq(&self.q3)
    }

    pub fn classify(&self) -> CausalClass {
        match self.i_norm().sign() {
            Ordering::Less => CausalClass::Spacelike,
            Ordering::Equal => CausalClass::Lightlike,
            Ordering::Greater => CausalClass::Timelike,
        }
    }

    pub fn is_lightlike(&self) -> bool {
        self.i_norm().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero()
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn div_scalar(&self, s: &S) -> Self {
        self.map(|c| c.clone() / s.clone())
    }

    /// Two-sided inverse `q̄ / I(q)`, or `None` for zero divisors.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.i_norm();
        if n.is_zero() {
            None
        } else {
            Some(self.conjugate().div_scalar(&n))
        }
    }

    pub fn to_complex_pair(&self) -> ComplexPair<S> {
        ComplexPair {
            z1: Complex::new(self.q0.clone(), self.q1.clone()),
            z2: Complex::new(self.q2.clone(), self.q3.clone()),
        }
    }

    pub fn from_complex_pair(pair: &ComplexPair<S>) -> Self {
        SplitQuaternion::new(
            pair.z1.re.clone(),
            pair.z1.im.clone(),
            pair.z2.re.clone(),
            pair.z2.im.clone(),
        )
    }

    /// Euclidean norm of the coefficient vector, used for error scaling.
    pub fn euclidean_norm(&self) -> f64 {
        self.to_array()
            .iter()
            .map(|c| c.to_f64().powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// `true` when `self = t·other` for some scalar `t` (zero counts as
    /// parallel to everything).
    pub fn is_parallel_to(&self, other: &Self) -> bool {
        let a = self.to_array();
        let b = other.to_array();
        (0..4).all(|m| {
            (m + 1..4)
                .all(|n| (a[m].clone() * b[n].clone() - a[n].clone() * b[m].clone()).is_zero())
        })
    }
}

fn sq<S: Scalar>(s: &S) -> S {
    s.clone() * s.clone()
}

fn product<S: Scalar>(p: &SplitQuaternion<S>, q: &SplitQuaternion<S>) -> SplitQuaternion<S> {
    let m = |a: &S, b: &S| a.clone() * b.clone();
    SplitQuaternion::new(
        m(&p.q0, &q.q0) - m(&p.q1, &q.q1) + m(&p.q2, &q.q2) + m(&p.q3, &q.q3),
        m(&p.q0, &q.q1) + m(&p.q1, &q.q0) - m(&p.q2, &q.q3) + m(&p.q3, &q.q2),
        m(&p.q0, &q.q2) + m(&p.q2, &q.q0) + m(&p.q3, &q.q1) - m(&p.q1, &q.q3),
        m(&p.q0, &q.q3) + m(&p.q3, &q.q0) + m(&p.q1, &q.q2) - m(&p.q2, &q.q1),
    )
}

fn zip<S: Scalar>(
    p: &SplitQuaternion<S>,
    q: &SplitQuaternion<S>,
    f: impl Fn(S, S) -> S,
) -> SplitQuaternion<S> {
    SplitQuaternion::new(
        f(p.q0.clone(), q.q0.clone()),
        f(p.q1.clone(), q.q1.clone()),
        f(p.q2.clone(), q.q2.clone()),
        f(p.q3.clone(), q.q3.clone()),
    )
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<S: Scalar> $tr<&SplitQuaternion<S>> for &SplitQuaternion<S> {
            type Output = SplitQuaternion<S>;
            fn $method(self, rhs: &SplitQuaternion<S>) -> SplitQuaternion<S> {
                $body(self, rhs)
            }
        }
        impl<S: Scalar> $tr<SplitQuaternion<S>> for SplitQuaternion<S> {
            type Output = SplitQuaternion<S>;
            fn $method(self, rhs: SplitQuaternion<S>) -> SplitQuaternion<S> {
                $body(&self, &rhs)
            }
        }
        impl<S: Scalar> $tr<&SplitQuaternion<S>> for SplitQuaternion<S> {
            type Output = SplitQuaternion<S>;
            fn $method(self, rhs: &SplitQuaternion<S>) -> SplitQuaternion<S> {
                $body(&self, rhs)
            }
        }
        impl<S: Scalar> $tr<SplitQuaternion<S>> for &SplitQuaternion<S> {
            type Output = SplitQuaternion<S>;
            fn $method(self, rhs: SplitQuaternion<S>) -> SplitQuaternion<S> {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Mul, mul, product);
forward_binop!(Add, add, |p, q| zip(p, q, |a, b| a + b));
forward_binop!(Sub, sub, |p, q| zip(p, q, |a, b| a - b));

impl<S: Scalar> Neg for SplitQuaternion<S> {
    type Output = SplitQuaternion<S>;
    fn neg(self) -> SplitQuaternion<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar> Neg for &SplitQuaternion<S> {
    type Output = SplitQuaternion<S>;
    fn neg(self) -> SplitQuaternion<S> {
        self.map(|c| -c.clone())
    }
}

/// Writes the quaternion in the literal grammar accepted by
/// [`crate::parse`], e.g. `1+3i-1/2j+k`. The alternate form `{:#}` keeps
/// full floating-point precision on the [`Approx`] backend.
impl<S: Scalar> fmt::Display for SplitQuaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coeff, unit) in self.to_array().iter().zip(["", "i", "j", "k"]) {
            if coeff.is_zero() {
                continue;
            }
            let text = if f.alternate() {
                format!("{coeff:#}")
            } else {
                coeff.to_string()
            };
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            if negative {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            if unit.is_empty() || magnitude != "1" {
                f.write_str(magnitude)?;
            }
            f.write_str(unit)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
