//! Consimilarity: the equation `xa = b x̄`.
//!
//! The solution set is the kernel of `S(a,b) = R(a) - L(b) F`, whose
//! determinant is `(I_a - I_b) I(ā + b)`. Taking `I` of both sides of
//! `xa = b x̄` gives `I_x (I_a - I_b) = 0`, so an invertible solution needs
//! `I_a = I_b`; in that case `ā + b` is itself a solution.

use crate::error::{Error, Result};
use crate::matrix::{s_matrix, Mat4};
use crate::quaternion::SplitQuaternion;
use crate::scalar::Scalar;
use crate::solve::SolutionFamily;

/// All solutions of `xa = b x̄`, parametrized by the orthogonal projector
/// `E - S⁺S` onto the kernel of `S(a,b)`.
pub fn solve_xa_bxbar<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> SolutionFamily<S> {
    let s = s_matrix(a, b);
    let projector = Mat4::identity() - s.mp_inverse() * s;
    SolutionFamily::from_matrix(SplitQuaternion::zero(), &projector)
}

/// Verdict of [`is_consimilar`]; when consimilar, `witness` is an
/// invertible `x` with `x a = b x̄`.
#[derive(Clone, Debug, PartialEq)]
pub struct Consimilarity<S> {
    pub consimilar: bool,
    pub witness: Option<SplitQuaternion<S>>,
}

/// Solutions of `xa = -ā x̄` tried, in order, when `ā + b = 0`:
/// `a3 i + a1 k`, `a2 i + a1 j`, `a1 + a0 i`. For non-real `a` at least one
/// of them is invertible.
pub fn antipodal_candidates<S: Scalar>(a: &SplitQuaternion<S>) -> [SplitQuaternion<S>; 3] {
    let [a0, a1, a2, a3] = a.to_array();
    let z = S::zero;
    [
        SplitQuaternion::new(z(), a3, z(), a1.clone()),
        SplitQuaternion::new(z(), a2, a1.clone(), z()),
        SplitQuaternion::new(a1, a0, z(), z()),
    ]
}

/// Decides whether `x a = b x̄` has an invertible solution, for non-real
/// `a, b`: exactly when `ā + b = 0`, or `I_a = I_b` and `I(ā + b) ≠ 0`.
pub fn is_consimilar<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Result<Consimilarity<S>> {
    if a.is_real() {
        return Err(Error::RealInput("a"));
    }
    if b.is_real() {
        return Err(Error::RealInput("b"));
    }
    let sum = a.conjugate() + b;
    let witness = if sum.is_zero() {
        antipodal_candidates(a)
            .into_iter()
            .find(|x| !x.is_lightlike())
    } else if (a.i_norm() - b.i_norm()).is_zero() && !sum.is_lightlike() {
        Some(sum)
    } else {
        None
    };
    debug_assert!(witness
        .as_ref()
        .is_none_or(|x| x * a == b * &x.conjugate()));
    Ok(Consimilarity {
        consimilar: witness.is_some(),
        witness,
    })
}
