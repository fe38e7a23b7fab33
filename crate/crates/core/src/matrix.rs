//! Real 4×4 matrix representations.
//!
//! Writing `vec(x) = (x0, x1, x2, x3)ᵀ`, left and right multiplication by a
//! split quaternion are linear maps: `vec(q x) = L(q) vec(x)` and
//! `vec(x q) = R(q) vec(x)`. The equations `xa = bx` and `xa = b x̄` become
//! the homogeneous systems `T(a,b) vec(x) = 0` and `S(a,b) vec(x) = 0` with
//! `T(a,b) = R(a) - L(b)` and `S(a,b) = R(a) - L(b) F`, `F = diag(1,-1,-1,-1)`.
//!
//! Ranks, determinants, kernels and Moore-Penrose inverses are computed by
//! elimination in the matrix's own scalar backend; the closed-form spectra
//! below are independent cross-checks.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::linalg::Dense;
use crate::quaternion::{Complex, SplitQuaternion};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat4<S> {
    m: [[S; 4]; 4],
}

impl<S: Scalar> Mat4<S> {
    pub fn from_rows(m: [[S; 4]; 4]) -> Self {
        Mat4 { m }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        Mat4 {
            m: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    /// `diag(d0, d1, d2, d3)`
    pub fn diagonal(d: [S; 4]) -> Self {
        Self::from_fn(|r, c| if r == c { d[r].clone() } else { S::zero() })
    }

    /// The sign flip `F = diag(1,-1,-1,-1)`, i.e. `F vec(x) = vec(x̄)`.
    pub fn flip() -> Self {
        Self::diagonal([1, -1, -1, -1].map(S::from_i64))
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.m[r][c]
    }

    pub fn rows(&self) -> &[[S; 4]; 4] {
        &self.m
    }

    pub fn column(&self, c: usize) -> [S; 4] {
        std::array::from_fn(|r| self.m[r][c].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.m[c][r].clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() * s.clone())
    }

    pub fn mul_vec(&self, v: &[S; 4]) -> [S; 4] {
        std::array::from_fn(|r| {
            (0..4).fold(S::zero(), |acc, c| {
                acc + self.m[r][c].clone() * v[c].clone()
            })
        })
    }

    /// Applies the matrix to the coefficient vector of `q`.
    pub fn apply(&self, q: &SplitQuaternion<S>) -> SplitQuaternion<S> {
        SplitQuaternion::from_array(self.mul_vec(&q.to_array()))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    fn dense(&self) -> Dense<S> {
        Dense::from_fn(4, 4, |r, c| self.m[r][c].clone())
    }

    fn from_dense(d: &Dense<S>) -> Self {
        Self::from_fn(|r, c| d.at(r, c).clone())
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> S {
        self.dense().det()
    }

    pub fn rank(&self) -> usize {
        self.dense().rank()
    }

    /// Basis of the kernel; its length is `4 - rank`.
    pub fn nullspace_basis(&self) -> Vec<[S; 4]> {
        self.dense()
            .nullspace()
            .into_iter()
            .map(|v| std::array::from_fn(|n| v[n].clone()))
            .collect()
    }

    /// Basis of the column space (the pivot columns).
    pub fn column_basis(&self) -> Vec<[S; 4]> {
        let (_, pivots) = self.dense().rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    /// Whether `M x = rhs` has a solution.
    pub fn is_consistent(&self, rhs: &[S; 4]) -> bool {
        self.dense().solve(rhs).is_some()
    }

    /// One solution of `M x = rhs`, if any.
    pub fn solve(&self, rhs: &[S; 4]) -> Option<[S; 4]> {
        self.dense()
            .solve(rhs)
            .map(|v| std::array::from_fn(|n| v[n].clone()))
    }

    pub fn inverse(&self) -> Option<Self> {
        self.dense().inverse().map(|d| Self::from_dense(&d))
    }

    /// Moore-Penrose inverse via full-rank factorization. The zero matrix
    /// maps to itself.
    pub fn mp_inverse(&self) -> Self {
        Self::from_dense(&self.dense().mp_inverse())
    }

    /// The four Penrose equations `MXM = M`, `XMX = X`, `(MX)ᵀ = MX`,
    /// `(XM)ᵀ = XM`.
    pub fn penrose_equations(&self, x: &Self) -> [bool; 4] {
        let mx = self * x;
        let xm = x * self;
        [
            &mx * self == *self,
            &xm * x == *x,
            mx.is_symmetric(),
            xm.is_symmetric(),
        ]
    }
}

impl<S: Scalar> Mul for &Mat4<S> {
    type Output = Mat4<S>;
    fn mul(self, rhs: &Mat4<S>) -> Mat4<S> {
        Mat4::from_fn(|r, c| {
            (0..4).fold(S::zero(), |acc, n| {
                acc + self.m[r][n].clone() * rhs.m[n][c].clone()
            })
        })
    }
}

impl<S: Scalar> Mul for Mat4<S> {
    type Output = Mat4<S>;
    fn mul(self, rhs: Mat4<S>) -> Mat4<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &Mat4<S> {
    type Output = Mat4<S>;
    fn add(self, rhs: &Mat4<S>) -> Mat4<S> {
        Mat4::from_fn(|r, c| self.m[r][c].clone() + rhs.m[r][c].clone())
    }
}

impl<S: Scalar> Add for Mat4<S> {
    type Output = Mat4<S>;
    fn add(self, rhs: Mat4<S>) -> Mat4<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Mat4<S> {
    type Output = Mat4<S>;
    fn sub(self, rhs: &Mat4<S>) -> Mat4<S> {
        Mat4::from_fn(|r, c| self.m[r][c].clone() - rhs.m[r][c].clone())
    }
}

impl<S: Scalar> Sub for Mat4<S> {
    type Output = Mat4<S>;
    fn sub(self, rhs: Mat4<S>) -> Mat4<S> {
        &self - &rhs
    }
}

impl<S: Scalar> fmt::Display for Mat4<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .m
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (n, row) in cells.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// `L(q)`: matrix of `x ↦ q x`.
pub fn left_matrix<S: Scalar>(q: &SplitQuaternion<S>) -> Mat4<S> {
    let [a, b, c, d] = q.to_array();
    Mat4::from_rows([
        [a.clone(), -b.clone(), c.clone(), d.clone()],
        [b.clone(), a.clone(), d.clone(), -c.clone()],
        [c.clone(), d.clone(), a.clone(), -b.clone()],
        [d, -c, b, a],
    ])
}

/// `R(q)`: matrix of `x ↦ x q`.
pub fn right_matrix<S: Scalar>(q: &SplitQuaternion<S>) -> Mat4<S> {
    let [a, b, c, d] = q.to_array();
    Mat4::from_rows([
        [a.clone(), -b.clone(), c.clone(), d.clone()],
        [b.clone(), a.clone(), -d.clone(), c.clone()],
        [c.clone(), -d.clone(), a.clone(), b.clone()],
        [d, c, -b, a],
    ])
}

/// `T(a,b) = R(a) - L(b)`; its kernel is the solution set of `xa = bx`.
pub fn t_matrix<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> Mat4<S> {
    right_matrix(a) - left_matrix(b)
}

/// `S(a,b) = R(a) - L(b) F`; its kernel is the solution set of `xa = b x̄`.
pub fn s_matrix<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> Mat4<S> {
    right_matrix(a) - left_matrix(b) * Mat4::flip()
}

/// Which singular regime `T(a,b)` or `S(a,b)` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankCase {
    NonSingular,
    /// `S`: `ā + b = 0`.
    Rank1,
    /// `T`: `a0 = b0` and `K(a) = K(b)`.
    Rank2,
    /// `T`: `a0 ≠ b0` and `det T = 0`.
    Rank3,
    /// `S`: `I_a = I_b` and `I(ā+b) ≠ 0`.
    Rank3a,
    /// `S`: `I_a = I_b` and `ā+b` nonzero lightlike.
    Rank3b,
    /// `S`: `I_a ≠ I_b` and `ā+b` nonzero lightlike.
    Rank3c,
}

impl RankCase {
    /// Rank of the matrix in this case.
    pub fn rank(self) -> usize {
        match self {
            RankCase::NonSingular => 4,
            RankCase::Rank1 => 1,
            RankCase::Rank2 => 2,
            RankCase::Rank3 | RankCase::Rank3a | RankCase::Rank3b | RankCase::Rank3c => 3,
        }
    }
}

impl fmt::Display for RankCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `√r` as a complex number: real for `r ≥ 0`, imaginary otherwise.
/// `None` when the backend cannot represent the root.
fn complex_sqrt<S: Scalar>(r: &S) -> Option<Complex<S>> {
    match r.sqrt() {
        Some(s) => Some(Complex::real(s)),
        None => (-r.clone()).sqrt().map(|s| Complex::new(S::zero(), s)),
    }
}

fn plus_minus<S: Scalar>(base: &Complex<S>, root: &Complex<S>) -> [Complex<S>; 2] {
    [
        Complex::new(
            base.re.clone() + root.re.clone(),
            base.im.clone() + root.im.clone(),
        ),
        Complex::new(
            base.re.clone() - root.re.clone(),
            base.im.clone() - root.im.clone(),
        ),
    ]
}

/// Eigenvalues `a0 ± √K(a) - (b0 ± √K(b))` of `T(a,b)`, ordered by sign
/// pattern `(+,+), (+,-), (-,+), (-,-)`.
///
/// `None` when a square root is not representable (irrational roots on the
/// exact backend).
pub fn t_eigenvalues<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Option<[Complex<S>; 4]> {
    let ra = complex_sqrt(&a.k_form())?;
    let rb = complex_sqrt(&b.k_form())?;
    let base = Complex::real(a.re() - b.re());
    let [p, m] = plus_minus(&base, &ra);
    let [pp, pm] = plus_minus(&p, &Complex::new(-rb.re.clone(), -rb.im.clone()));
    let [mp, mm] = plus_minus(&m, &Complex::new(-rb.re, -rb.im));
    Some([pp, pm, mp, mm])
}

/// `det T(a,b) = (a0-b0)⁴ - 2(a0-b0)²(K(a)+K(b)) + (K(a)-K(b))²`.
pub fn t_det<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> S {
    let d = a.re() - b.re();
    let d2 = d.clone() * d;
    let (ka, kb) = (a.k_form(), b.k_form());
    let diff = ka.clone() - kb.clone();
    d2.clone() * d2.clone() - S::from_i64(2) * d2 * (ka + kb) + diff.clone() * diff
}

/// Case of `T(a,b)` for non-real `a, b`.
pub fn t_rank_case<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> Result<RankCase> {
    if a.is_real() {
        return Err(Error::RealInput("a"));
    }
    if b.is_real() {
        return Err(Error::RealInput("b"));
    }
    Ok(if !t_det(a, b).is_zero() {
        RankCase::NonSingular
    } else if (a.re() - b.re()).is_zero() {
        RankCase::Rank2
    } else {
        RankCase::Rank3
    })
}

/// Eigenvalues of `S(a,b)`: `a0 ± √(K(a)+I_b)` and
/// `a0+b0 ± √(K(a)+K(b)+2(a1b1-a2b2-a3b3))`.
pub fn s_eigenvalues<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Option<[Complex<S>; 4]> {
    let [_, a1, a2, a3] = a.to_array();
    let [_, b1, b2, b3] = b.to_array();
    let cross = a1 * b1 - a2 * b2 - a3 * b3;
    let r12 = complex_sqrt(&(a.k_form() + b.i_norm()))?;
    let r34 = complex_sqrt(&(a.k_form() + b.k_form() + S::from_i64(2) * cross))?;
    let [l1, l2] = plus_minus(&Complex::real(a.re()), &r12);
    let [l3, l4] = plus_minus(&Complex::real(a.re() + b.re()), &r34);
    Some([l1, l2, l3, l4])
}

/// `det S(a,b) = (I_a - I_b) · I(ā + b)`.
pub fn s_det<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> S {
    (a.i_norm() - b.i_norm()) * (a.conjugate() + b).i_norm()
}

/// Case of `S(a,b)` for non-real `a`.
///
/// The case follows from `I_a`, `I_b` and `ā + b` alone. Its rank is the
/// rank of `S(a,b)` except in `Rank3b` with `I_a = I_b = 0`, where the rank
/// can drop to 2 (for example `a = -3i + 3j`, `b = -11i + 11j`).
pub fn s_rank_case<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> Result<RankCase> {
    if a.is_real() {
        return Err(Error::RealInput("a"));
    }
    let sum = a.conjugate() + b;
    let same_norm = (a.i_norm() - b.i_norm()).is_zero();
    Ok(if sum.is_zero() {
        RankCase::Rank1
    } else if !sum.is_lightlike() {
        if same_norm {
            RankCase::Rank3a
        } else {
            RankCase::NonSingular
        }
    } else if same_norm {
        RankCase::Rank3b
    } else {
        RankCase::Rank3c
    })
}

/// Product of four complex numbers.
pub fn complex_product<S: Scalar>(values: &[Complex<S>]) -> Complex<S> {
    values
        .iter()
        .fold(Complex::real(S::one()), |acc, v| acc.mul(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Approx, Exact};

    type Q = SplitQuaternion<Exact>;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
        Q::from_ints(a, b, c, d)
    }

    fn e(n: i64) -> Exact {
        Exact::from_i64(n)
    }

    #[test]
    fn left_matrix_of_units() {
        assert_eq!(left_matrix(&Q::one()), Mat4::identity());
        assert_eq!(left_matrix(&Q::i()).column(0), [0, 1, 0, 0].map(e));
        assert_eq!(right_matrix(&Q::one()), Mat4::identity());
    }

    #[test]
    fn matrices_represent_multiplication() {
        let (a, x) = (q(1, 2, 3, 4), q(-2, 5, 1, 7));
        assert_eq!(left_matrix(&a).apply(&x), &a * &x);
        assert_eq!(right_matrix(&a).apply(&x), &x * &a);
        assert_eq!(Mat4::flip().apply(&x), x.conjugate());
    }

    #[test]
    fn transpose_of_left_matrix_is_prime() {
        let a = q(1, 2, 3, 4);
        assert_eq!(left_matrix(&a).transpose(), left_matrix(&a.prime()));
        assert_eq!(right_matrix(&a).transpose(), right_matrix(&a.prime()));
    }

    #[test]
    fn t_matrix_kernel_contains_commutant() {
        let a = q(3, -1, 2, 5);
        assert_eq!(t_matrix(&a, &a).apply(&Q::one()), Q::zero());
    }

    #[test]
    fn t_spectrum_of_amended_pair() {
        let (a, b) = (q(1, 5, 5, 2), q(2, 1, 1, 3));
        let t = t_matrix(&a, &b);
        assert_eq!(t.det(), e(0));
        assert_eq!(t.rank(), 3);
        let mut eig: Vec<Exact> = t_eigenvalues(&a, &b)
            .unwrap()
            .into_iter()
            .map(|c| {
                assert_eq!(c.im, e(0));
                c.re
            })
            .collect();
        eig.sort();
        assert_eq!(eig, vec![e(-6), e(-2), e(0), e(4)]);
        assert_eq!(t_rank_case(&a, &b), Ok(RankCase::Rank3));
    }

    #[test]
    fn t_rank_examples() {
        let (a, b) = (q(1, 3, 2, 1), q(1, 3, 1, 2));
        assert_eq!(t_matrix(&a, &b).rank(), 2);
        assert_eq!(t_rank_case(&a, &b), Ok(RankCase::Rank2));
        assert_eq!(t_matrix(&a, &b).nullspace_basis().len(), 2);
        assert_eq!(
            t_rank_case(&q(2, 1, 0, 1), &q(1, 0, 0, 1)),
            Ok(RankCase::Rank3)
        );
        assert_eq!(
            t_rank_case(&q(0, 1, 0, 0), &q(0, 0, 1, 0)),
            Ok(RankCase::NonSingular)
        );
        assert_eq!(
            t_rank_case(&q(2, 0, 0, 0), &q(1, 0, 0, 1)),
            Err(Error::RealInput("a"))
        );
    }

    #[test]
    fn irrational_spectrum_needs_approx() {
        let (a, b) = (q(2, 1, 2, 2), q(0, 0, 1, 0));
        assert!(t_eigenvalues(&a, &b).is_none());
        let (fa, fb) = (a.to_approx(), b.to_approx());
        let prod = complex_product(&t_eigenvalues(&fa, &fb).unwrap());
        assert!((prod.re.value() - t_det(&fa, &fb).value()).abs() < 1e-9);
        assert!(prod.im.value().abs() < 1e-9);
        let _: Option<[Complex<Approx>; 4]> = s_eigenvalues(&fa, &fb);
    }

    #[test]
    fn s_rank_examples() {
        let a = q(1, 2, 3, 4);
        let cases = [
            (q(-1, 2, 3, 4), RankCase::Rank1),
            (q(2, 1, 3, 4), RankCase::Rank3a),
            (q(-2, 1, 4, 3), RankCase::Rank3b),
            (q(2, 1, 0, 3), RankCase::Rank3c),
        ];
        for (b, case) in cases {
            assert_eq!(s_rank_case(&a, &b), Ok(case));
            assert_eq!(s_matrix(&a, &b).rank(), case.rank());
            assert_eq!(s_matrix(&a, &b).det(), e(0));
            assert_eq!(s_det(&a, &b), e(0));
        }
    }

    #[test]
    fn s_rank_drops_for_two_zero_divisors() {
        let (a, b) = (q(0, -3, 3, 0), q(0, -11, 11, 0));
        assert_eq!(s_rank_case(&a, &b), Ok(RankCase::Rank3b));
        assert_eq!(s_matrix(&a, &b).rank(), 2);
        assert_eq!(s_rank_case(&q(3, 0, 0, 0), &b), Err(Error::RealInput("a")));
    }

    #[test]
    fn mp_inverse_of_singular_left_matrix() {
        let a = q(1, 0, 1, 0);
        let x = left_matrix(&a).mp_inverse();
        let quarter = Exact::from_ratio(1, 4);
        assert_eq!(x, left_matrix(&a.scale(&quarter)));
        assert_eq!(left_matrix(&a).penrose_equations(&x), [true; 4]);
        assert_eq!(Mat4::<Exact>::zero().mp_inverse(), Mat4::zero());
        assert_eq!(Mat4::<Exact>::identity().mp_inverse(), Mat4::identity());
    }

    #[test]
    fn consistency_of_linear_systems() {
        let l = left_matrix(&q(1, 0, 1, 0));
        assert!(l.is_consistent(&[1, 0, 1, 0].map(e)));
        assert!(!l.is_consistent(&[1, 0, 0, 0].map(e)));
        assert!(Mat4::<Exact>::identity().nullspace_basis().is_empty());
    }
}
