//! Powers, nilpotents, idempotents and roots of zero divisors.
//!
//! Every split quaternion satisfies `q² = 2Re(q) q - I(q)`, so a zero
//! divisor has `qⁿ = (2Re(q))ⁿ⁻¹ q`. A nonzero zero divisor `c1 + c2 j` has
//! `|c1| = |c2|` and can be written `r(e^{iα} + e^{iβ} j)`; any root of it
//! is again a zero divisor with the same angles (or the opposite ones),
//! which pins down all roots in closed form.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::quaternion::SplitQuaternion;
use crate::scalar::{Approx, Scalar};

/// `qⁿ`, with `q⁰ = 1`.
pub fn power<S: Scalar>(q: &SplitQuaternion<S>, n: u32) -> SplitQuaternion<S> {
    if n == 0 {
        return SplitQuaternion::one();
    }
    if q.is_lightlike() {
        let twice_re = S::from_i64(2) * q.re();
        let factor = (1..n).fold(S::one(), |acc, _| acc * twice_re.clone());
        return q.scale(&factor);
    }
    power_by_squaring(q, n)
}

/// `qⁿ` by repeated squaring, for any `q`.
pub fn power_by_squaring<S: Scalar>(q: &SplitQuaternion<S>, mut n: u32) -> SplitQuaternion<S> {
    let mut base = q.clone();
    let mut acc = SplitQuaternion::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// `qⁿ = 0` for some `n`: exactly the pure imaginary zero divisors,
/// and then already `q² = 0`.
pub fn is_nilpotent<S: Scalar>(q: &SplitQuaternion<S>) -> bool {
    q.q0().is_zero() && q.i_norm().is_zero()
}

/// `q² = q`: `0`, `1`, or `½ + q1 i + q2 j + q3 k` with
/// `¼ + q1² - q2² - q3² = 0`.
pub fn is_idempotent<S: Scalar>(q: &SplitQuaternion<S>) -> bool {
    if q.is_real() {
        return q.q0().is_zero() || (q.q0().clone() - S::one()).is_zero();
    }
    let half = S::from_ratio(1, 2);
    (q.q0().clone() - half).is_zero() && q.i_norm().is_zero()
}

/// Polar form `r(e^{iα} + e^{iβ} j)` of a nonzero zero divisor, with
/// `α, β ∈ [0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LightlikePolar {
    pub r: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl LightlikePolar {
    pub fn to_quaternion(&self) -> SplitQuaternion<Approx> {
        let LightlikePolar { r, alpha, beta } = *self;
        SplitQuaternion::new(
            Approx::new(r * alpha.cos()),
            Approx::new(r * alpha.sin()),
            Approx::new(r * beta.cos()),
            Approx::new(r * beta.sin()),
        )
    }
}

fn angle(y: f64, x: f64) -> f64 {
    let t = y.atan2(x);
    let t = if t < 0.0 { t + TAU } else { t };
    // atan2 of a tiny negative y can round up to exactly 2π
    if t >= TAU {
        0.0
    } else {
        t
    }
}

fn require_root_input<S: Scalar>(q: &SplitQuaternion<S>) -> Result<()> {
    if q.is_zero() {
        Err(Error::ZeroInput)
    } else if !q.is_lightlike() {
        Err(Error::NotLightlike("q"))
    } else {
        Ok(())
    }
}

pub fn to_polar<S: Scalar>(q: &SplitQuaternion<S>) -> Result<LightlikePolar> {
    require_root_input(q)?;
    let [q0, q1, q2, q3] = q.to_array().map(|c| c.to_f64());
    Ok(LightlikePolar {
        r: q0.hypot(q1),
        alpha: angle(q1, q0),
        beta: angle(q3, q2),
    })
}

/// Roots returned by [`nth_roots`].
#[derive(Clone, Debug, PartialEq)]
pub struct Roots {
    pub roots: Vec<SplitQuaternion<Approx>>,
    /// Set when the input was exact and the roots were computed in
    /// floating point.
    pub escalated: bool,
}

/// All solutions `w` of `wⁿ = q` for a nonzero zero divisor `q`, `n ≥ 2`.
///
/// With `q = r(e^{iα} + e^{iβ} j)` and `ρ = (r / (2cos α)ⁿ⁻¹)^{1/n}`:
///
/// | `cos α` | `n` even       | `n` odd |
/// |---------|----------------|---------|
/// | `> 0`   | `±ρ(e^{iα} + e^{iβ} j)` | `ρ(e^{iα} + e^{iβ} j)` |
/// | `< 0`   | none           | `ρ(e^{iα} + e^{iβ} j)` |
/// | `= 0`   | none           | none    |
///
/// The sign of `cos α` is the sign of `q0`, decided in the input's backend.
pub fn nth_roots<S: Scalar>(q: &SplitQuaternion<S>, n: u32) -> Result<Roots> {
    if n < 2 {
        return Err(Error::BadExponent { min: 2, got: n });
    }
    require_root_input(q)?;
    let polar = to_polar(q)?;
    let even = n.is_multiple_of(2);
    let cos_sign = q.q0().sign();
    let escalated = S::EXACT;
    if cos_sign == Ordering::Equal || (cos_sign == Ordering::Less && even) {
        return Ok(Roots {
            roots: Vec::new(),
            escalated,
        });
    }
    let cos_alpha = polar.alpha.cos();
    let rho = (polar.r / (2.0 * cos_alpha).powi(n as i32 - 1)).powf(1.0 / n as f64);
    let eps = q.q0().to_approx().eps();
    let with_eps = |w: SplitQuaternion<Approx>| w.map(|c| Approx::with_eps(c.value(), eps));
    let principal = with_eps(LightlikePolar { r: rho, ..polar }.to_quaternion());
    let mut roots = vec![principal.clone()];
    if even {
        roots.push(-principal);
    }
    Ok(Roots { roots, escalated })
}
