//! Linear equations with zero-divisor coefficients.
//!
//! Each equation is a real 4×4 system `A vec(x) = vec(d)`, and the matrix
//! Moore-Penrose inverse of `A` is the multiplication matrix of the
//! quaternionic one. So `axb = d` is solvable iff `a a⁺ d b⁺ b = d`, with
//! general solution `x = a⁺ d b⁺ + y - a⁺ a y b b⁺`; the one-sided
//! equations are the special cases `b = 1` or `a = 1`.

use crate::error::{Error, Result};
use crate::linalg::Dense;
use crate::matrix::{left_matrix, right_matrix, Mat4};
use crate::pinv::mp_inverse;
use crate::quaternion::SplitQuaternion;
use crate::scalar::Scalar;

/// An affine family `y ↦ constant + Σ leftₖ · y · rightₖ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFamily<S> {
    constant: SplitQuaternion<S>,
    terms: Vec<(SplitQuaternion<S>, SplitQuaternion<S>)>,
    dimension: usize,
}

impl<S: Scalar> SolutionFamily<S> {
    pub fn new(
        constant: SplitQuaternion<S>,
        terms: Vec<(SplitQuaternion<S>, SplitQuaternion<S>)>,
    ) -> Self {
        let dimension = linear_map_of(&terms).rank();
        SolutionFamily {
            constant,
            terms,
            dimension,
        }
    }

    /// The single point `{constant}`.
    pub fn point(constant: SplitQuaternion<S>) -> Self {
        SolutionFamily {
            constant,
            terms: Vec::new(),
            dimension: 0,
        }
    }

    /// Family whose linear part is the real matrix `m`, expressed in the
    /// `y ↦ Σ leftₖ y rightₖ` form.
    ///
    /// The sixteen maps `y ↦ e_m y e_n` over the basis units are linearly
    /// independent, so every real 4×4 matrix has exactly one such expansion.
    pub fn from_matrix(constant: SplitQuaternion<S>, m: &Mat4<S>) -> Self {
        let basis = SplitQuaternion::<S>::basis();
        let products: Vec<Mat4<S>> = basis
            .iter()
            .flat_map(|l| basis.iter().map(move |r| left_matrix(l) * right_matrix(r)))
            .collect();
        let system = Dense::from_fn(16, 16, |row, col| {
            products[col].at(row / 4, row % 4).clone()
        });
        let rhs: Vec<S> = (0..16).map(|row| m.at(row / 4, row % 4).clone()).collect();
        let coeffs = system
            .solve(&rhs)
            .expect("unit products span all 4x4 matrices");
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (basis[n / 4].scale(&c), basis[n % 4].clone()))
            .collect();
        SolutionFamily {
            constant,
            terms,
            dimension: m.rank(),
        }
    }

    pub fn constant(&self) -> &SplitQuaternion<S> {
        &self.constant
    }

    pub fn terms(&self) -> &[(SplitQuaternion<S>, SplitQuaternion<S>)] {
        &self.terms
    }

    /// Dimension of the solution set (rank of the linear part).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The member of the family at parameter `y`.
    pub fn eval(&self, y: &SplitQuaternion<S>) -> SplitQuaternion<S> {
        self.terms
            .iter()
            .fold(self.constant.clone(), |acc, (l, r)| acc + &(l * y) * r)
    }

    /// Matrix of the linear part, `Σ L(leftₖ) R(rightₖ)`.
    pub fn linear_map(&self) -> Mat4<S> {
        linear_map_of(&self.terms)
    }

    /// A basis of the direction space of the family.
    pub fn basis(&self) -> Vec<SplitQuaternion<S>> {
        self.linear_map()
            .column_basis()
            .into_iter()
            .map(SplitQuaternion::from_array)
            .collect()
    }

    /// Whether `x` belongs to the family.
    pub fn contains(&self, x: &SplitQuaternion<S>) -> bool {
        self.linear_map()
            .is_consistent(&(x - &self.constant).to_array())
    }
}

fn linear_map_of<S: Scalar>(terms: &[(SplitQuaternion<S>, SplitQuaternion<S>)]) -> Mat4<S> {
    terms.iter().fold(Mat4::zero(), |acc, (l, r)| {
        acc + left_matrix(l) * right_matrix(r)
    })
}

/// Result of a solvability test.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<S> {
    Solvable(SolutionFamily<S>),
    /// The residual of the solvability condition (e.g. `a a⁺ d b⁺ b - d`),
    /// nonzero exactly when there is no solution.
    Unsolvable(SplitQuaternion<S>),
}

impl<S: Scalar> SolveOutcome<S> {
    pub fn is_solvable(&self) -> bool {
        matches!(self, SolveOutcome::Solvable(_))
    }

    pub fn family(&self) -> Option<&SolutionFamily<S>> {
        match self {
            SolveOutcome::Solvable(f) => Some(f),
            SolveOutcome::Unsolvable(_) => None,
        }
    }
}

fn require_zero_divisor<S: Scalar>(a: &SplitQuaternion<S>, name: &'static str) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroCoefficient)
    } else if !a.is_lightlike() {
        Err(Error::NotLightlike(name))
    } else {
        Ok(())
    }
}

fn outcome<S: Scalar>(
    residual: SplitQuaternion<S>,
    family: impl FnOnce() -> SolutionFamily<S>,
) -> SolveOutcome<S> {
    if residual.is_zero() {
        SolveOutcome::Solvable(family())
    } else {
        SolveOutcome::Unsolvable(residual)
    }
}

/// `a x b = d` for nonzero zero divisors `a`, `b`.
pub fn solve_axb<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
    d: &SplitQuaternion<S>,
) -> Result<SolveOutcome<S>> {
    require_zero_divisor(a, "a")?;
    require_zero_divisor(b, "b")?;
    let (ap, bp) = (mp_inverse(a), mp_inverse(b));
    let residual = &(&(a * &ap) * d) * &(&bp * b) - d;
    Ok(outcome(residual, || {
        SolutionFamily::new(
            &(&ap * d) * &bp,
            vec![
                (SplitQuaternion::one(), SplitQuaternion::one()),
                (-(&ap * a), b * &bp),
            ],
        )
    }))
}

/// `c̄1 d ū1 / (4|c1|²|u1|²)`, the particular solution of `axb = d` in
/// complex-pair form. Equals `a⁺ d b⁺` whenever the equation is solvable.
pub fn axb_particular_simplified<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
    d: &SplitQuaternion<S>,
) -> SplitQuaternion<S> {
    let (c1, u1) = (a.to_complex_pair().z1, b.to_complex_pair().z1);
    let denom = S::from_i64(4) * c1.norm_sq() * u1.norm_sq();
    (&(c1.conj().to_quaternion() * d) * u1.conj().to_quaternion()).div_scalar(&denom)
}

/// `a x = 0`: the left annihilator family `x = (1 - a⁺a) y`.
pub fn solve_ax0<S: Scalar>(a: &SplitQuaternion<S>) -> Result<SolutionFamily<S>> {
    require_zero_divisor(a, "a")?;
    let ap = mp_inverse(a);
    Ok(SolutionFamily::new(
        SplitQuaternion::zero(),
        vec![(SplitQuaternion::one() - &ap * a, SplitQuaternion::one())],
    ))
}

/// `a x = d`: solvable iff `a a⁺ d = d`; then `x = a⁺d + (1 - a⁺a) y`.
pub fn solve_axd<S: Scalar>(
    a: &SplitQuaternion<S>,
    d: &SplitQuaternion<S>,
) -> Result<SolveOutcome<S>> {
    require_zero_divisor(a, "a")?;
    let ap = mp_inverse(a);
    let residual = &(a * &ap) * d - d;
    Ok(outcome(residual, || {
        SolutionFamily::new(
            &ap * d,
            vec![(SplitQuaternion::one() - &ap * a, SplitQuaternion::one())],
        )
    }))
}

/// `x a = d`: solvable iff `d a⁺ a = d`; then `x = d a⁺ + y (1 - a a⁺)`.
pub fn solve_xad<S: Scalar>(
    a: &SplitQuaternion<S>,
    d: &SplitQuaternion<S>,
) -> Result<SolveOutcome<S>> {
    require_zero_divisor(a, "a")?;
    let ap = mp_inverse(a);
    let residual = d * &(&ap * a) - d;
    Ok(outcome(residual, || {
        SolutionFamily::new(
            d * &ap,
            vec![(SplitQuaternion::one(), SplitQuaternion::one() - a * &ap)],
        )
    }))
}
