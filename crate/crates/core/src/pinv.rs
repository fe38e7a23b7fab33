//! Moore-Penrose inverse of a split quaternion.
//!
//! For `a = c1 + c2·j`:
//!
//! * `a = 0` gives `a⁺ = 0`;
//! * `I(a) ≠ 0` gives the ordinary inverse `a⁺ = ā / I(a)`;
//! * a nonzero zero divisor gives `a⁺ = (c̄1 + c2·j) / (4|c1|²)`.
//!
//! In the last case `|c1| = |c2|`, so `c1 ≠ 0` whenever `a ≠ 0`.
//! Coefficient-wise `c̄1 + c2·j` is the prime `a'`, and `L(a⁺)`, `R(a⁺)` are
//! the matrix Moore-Penrose inverses of `L(a)`, `R(a)`.

use crate::error::{Error, Result};
use crate::matrix::{left_matrix, right_matrix, Mat4};
use crate::quaternion::{Complex, SplitQuaternion};
use crate::scalar::Scalar;

pub fn mp_inverse<S: Scalar>(a: &SplitQuaternion<S>) -> SplitQuaternion<S> {
    if a.is_zero() {
        return SplitQuaternion::zero();
    }
    let norm = a.i_norm();
    if !norm.is_zero() {
        return a.conjugate().div_scalar(&norm);
    }
    let c1_sq = a.to_complex_pair().z1.norm_sq();
    debug_assert!(!c1_sq.is_zero(), "nonzero lightlike element with c1 = 0");
    a.prime().div_scalar(&(S::from_i64(4) * c1_sq))
}

/// [`mp_inverse`] together with a conditioning flag.
#[derive(Clone, Debug, PartialEq)]
pub struct Pinv<S> {
    pub value: SplitQuaternion<S>,
    /// Set when `|I(a)|` lies just above the zero threshold
    /// (`ε < |I(a)| ≤ 100ε` on the floating-point backend), where a small
    /// perturbation would switch between the invertible and the
    /// zero-divisor formulas.
    pub ill_conditioned: bool,
}

pub fn mp_inverse_diagnosed<S: Scalar>(a: &SplitQuaternion<S>) -> Pinv<S> {
    Pinv {
        value: mp_inverse(a),
        ill_conditioned: a.i_norm().is_marginal(),
    }
}

fn require_nonzero_lightlike<S: Scalar>(a: &SplitQuaternion<S>, name: &'static str) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroInput)
    } else if !a.is_lightlike() {
        Err(Error::NotLightlike(name))
    } else {
        Ok(())
    }
}

/// The idempotents `(a a⁺, a⁺ a)` of a nonzero zero divisor.
pub fn projectors<S: Scalar>(
    a: &SplitQuaternion<S>,
) -> Result<(SplitQuaternion<S>, SplitQuaternion<S>)> {
    require_nonzero_lightlike(a, "a")?;
    let p = mp_inverse(a);
    Ok((a * &p, &p * a))
}

/// `z·j` for a complex `z`.
pub(crate) fn times_j<S: Scalar>(z: &Complex<S>) -> SplitQuaternion<S> {
    SplitQuaternion::new(S::zero(), S::zero(), z.re.clone(), z.im.clone())
}

/// The same projectors from their coefficient formulas,
/// `a a⁺ = ½(1 + (c2/c̄1) j)` and `a⁺ a = ½(1 + (c2/c1) j)`.
pub fn projectors_closed_form<S: Scalar>(
    a: &SplitQuaternion<S>,
) -> Result<(SplitQuaternion<S>, SplitQuaternion<S>)> {
    require_nonzero_lightlike(a, "a")?;
    let pair = a.to_complex_pair();
    let half = S::from_ratio(1, 2);
    let one = SplitQuaternion::one();
    let left = (&one + times_j(&pair.z2.div(&pair.z1.conj()))).scale(&half);
    let right = (&one + times_j(&pair.z2.div(&pair.z1))).scale(&half);
    Ok((left, right))
}

/// Outcome of [`check_penrose_coherence`]: one named boolean per identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub checks: Vec<(&'static str, bool)>,
}

impl CoherenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect()
    }
}

/// Checks that the quaternionic inverse agrees with the matrix
/// Moore-Penrose inverse of the multiplication matrices.
///
/// Covers the Penrose equations for `L(a), L(a⁺)` and `R(a), R(a⁺)`, the
/// equalities `L(a)⁺ = L(a⁺)`, `R(a)⁺ = R(a⁺)`, `R(b)⁺ = R(b⁺)` and
/// `(L(a)R(b))⁺ = L(a⁺)R(b⁺)` against the full-rank-factorization oracle,
/// and the quaternionic identities `a a⁺ a = a`, `a⁺ a a⁺ = a⁺`.
pub fn check_penrose_coherence<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> CoherenceReport {
    let (ap, bp) = (mp_inverse(a), mp_inverse(b));
    let (la, lap) = (left_matrix(a), left_matrix(&ap));
    let (ra, rap) = (right_matrix(a), right_matrix(&ap));
    let (rb, rbp) = (right_matrix(b), right_matrix(&bp));
    let [l1, l2, l3, l4] = la.penrose_equations(&lap);
    let [r1, r2, r3, r4] = ra.penrose_equations(&rap);
    let lr: Mat4<S> = &la * &rb;
    CoherenceReport {
        checks: vec![
            ("L(a)L(a+)L(a) = L(a)", l1),
            ("L(a+)L(a)L(a+) = L(a+)", l2),
            ("L(a)L(a+) symmetric", l3),
            ("L(a+)L(a) symmetric", l4),
            ("R(a)R(a+)R(a) = R(a)", r1),
            ("R(a+)R(a)R(a+) = R(a+)", r2),
            ("R(a)R(a+) symmetric", r3),
            ("R(a+)R(a) symmetric", r4),
            ("L(a)+ = L(a+)", la.mp_inverse() == lap),
            ("R(a)+ = R(a+)", ra.mp_inverse() == rap),
            ("R(b)+ = R(b+)", rb.mp_inverse() == rbp),
            ("(L(a)R(b))+ = L(a+)R(b+)", lr.mp_inverse() == &lap * &rbp),
            ("a a+ a = a", &(a * &ap) * a == *a),
            ("a+ a a+ = a+", &(&ap * a) * &ap == ap),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Approx, Exact};

    type Q = SplitQuaternion<Exact>;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
        Q::from_ints(a, b, c, d)
    }

    #[test]
    fn zero_and_invertible_cases() {
        assert_eq!(mp_inverse(&Q::zero()), Q::zero());
        assert_eq!(
            mp_inverse(&q(2, 0, 0, 0)),
            Q::from_real(Exact::from_ratio(1, 2))
        );
        let a = q(1, 2, 3, 4);
        assert_eq!(&a * &mp_inverse(&a), Q::one());
        assert_eq!(mp_inverse(&mp_inverse(&a)), a);
    }

    #[test]
    fn lightlike_branch() {
        let a = q(1, 0, 1, 0);
        assert_eq!(mp_inverse(&a), a.scale(&Exact::from_ratio(1, 4)));
        let (l, r) = projectors(&a).unwrap();
        let half = a.scale(&Exact::from_ratio(1, 2));
        assert_eq!(l, half);
        assert_eq!(r, half);
    }

    #[test]
    fn projectors_match_closed_form() {
        for a in [q(1, 1, 1, 1), q(3, 4, 5, 0), q(0, 1, 0, 1), q(-2, 1, 1, 2)] {
            assert!(a.is_lightlike());
            let (l, r) = projectors(&a).unwrap();
            assert_eq!((l.clone(), r.clone()), projectors_closed_form(&a).unwrap());
            assert_eq!(&l * &l, l);
            assert_eq!(&r * &r, r);
        }
    }

    #[test]
    fn projector_errors() {
        assert_eq!(projectors(&Q::zero()), Err(Error::ZeroInput));
        assert_eq!(projectors(&q(1, 2, 0, 0)), Err(Error::NotLightlike("a")));
    }

    #[test]
    fn coherence_on_each_class() {
        for a in [
            q(1, 0, 1, 0),
            q(2, 0, 0, 0),
            q(1, 2, 3, 4),
            q(3, 1, 1, 1),
            Q::zero(),
        ] {
            let report = check_penrose_coherence(&a, &q(1, 1, 1, 1));
            assert!(report.all_pass(), "{a}: {:?}", report.failures());
        }
    }

    #[test]
    fn marginal_norm_is_flagged() {
        let eps_tiny = SplitQuaternion::new(
            Approx::new(1.0),
            Approx::new(0.0),
            Approx::new(1.0),
            Approx::new(1e-4),
        );
        // I = -1e-8, inside (ε, 100ε]
        assert!(mp_inverse_diagnosed(&eps_tiny).ill_conditioned);
        let clean = SplitQuaternion::<Approx>::from_ints(1, 0, 1, 0);
        assert!(!mp_inverse_diagnosed(&clean).ill_conditioned);
    }
}
