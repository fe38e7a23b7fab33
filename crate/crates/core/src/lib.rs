//! Split-quaternion algebra.
//!
//! The split quaternions are the real algebra spanned by `1, i, j, k` with
//! `i² = -1`, `j² = k² = 1` and `ij = k = -ji`. Unlike the Hamilton
//! quaternions they contain zero divisors: every `q` with
//! `I(q) = q0² + q1² - q2² - q3² = 0`. This crate provides
//!
//! * the value type and its invariants ([`SplitQuaternion`], [`quaternion`]),
//! * left/right multiplication matrices and the operators whose kernels
//!   describe `xa = bx` and `xa = b x̄` ([`matrix`]),
//! * the Moore-Penrose inverse of a split quaternion ([`pinv`]),
//! * solvers for `axb = d`, `ax = 0`, `ax = d`, `xa = d` with zero-divisor
//!   coefficients ([`solve`]),
//! * similarity and consimilarity tests with explicit witnesses and
//!   canonical forms ([`similarity`], [`consimilarity`]),
//! * powers and roots of zero divisors ([`roots`]).
//!
//! Everything is generic over a [`Scalar`] backend: [`Exact`] rationals or
//! [`Approx`] floats with a tolerance.
//!
//! ```
//! use splitq::{Exact, SplitQuaternion};
//! use splitq::similarity::is_similar;
//!
//! let a: SplitQuaternion<Exact> = "1+5i+3j+4k".parse().unwrap();
//! let b: SplitQuaternion<Exact> = "1+13i+12j+5k".parse().unwrap();
//! let verdict = is_similar(&a, &b, 0).unwrap();
//! let q = verdict.witness.unwrap();
//! assert!(!q.is_lightlike());
//! assert_eq!(&q * &a, &b * &q);
//! ```

pub mod consimilarity;
pub mod error;
mod linalg;
pub mod matrix;
pub mod parse;
pub mod pinv;
pub mod quaternion;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod similarity;
pub mod solve;

pub use error::{Error, Result};
pub use matrix::{left_matrix, right_matrix, s_matrix, t_matrix, Mat4, RankCase};
pub use parse::{parse_quat, AnyQuaternion, ParseError};
pub use pinv::mp_inverse;
pub use quaternion::{CausalClass, Complex, ComplexPair, SplitQuaternion};
pub use scalar::{Approx, Exact, Scalar, DEFAULT_EPS};
pub use solve::{SolutionFamily, SolveOutcome};

#[cfg(doctest)]
mod book {
    macro_rules! chapters {
        ($($name:ident => $file:literal),* $(,)?) => {
            $(
                #[doc = include_str!(concat!("../../../book/src/", $file))]
                pub mod $name {}
            )*
        };
    }

    chapters! {
        introduction => "introduction.md",
        arithmetic => "arithmetic.md",
        matrices => "matrices.md",
        pseudoinverse => "pseudoinverse.md",
        equations => "equations.md",
        similarity => "similarity.md",
        consimilarity => "consimilarity.md",
        roots => "roots.md",
        backends => "backends.md",
    }
}
