use thiserror::Error;

/// Failures reported by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,
    /// The routine needs a zero divisor (I(q) = 0). For an invertible
    /// coefficient divide directly instead, e.g. `x = a⁻¹ d b⁻¹`.
    #[error("{0} is not lightlike (I ≠ 0); divide by its inverse instead")]
    NotLightlike(&'static str),
    #[error("{0} must not be real")]
    RealInput(&'static str),
    #[error("case preconditions not met: {0}")]
    CaseMismatch(&'static str),
    #[error("no invertible solution found after {attempts} probes")]
    WitnessSearchExhausted { attempts: usize },
    /// A square root is not representable in the chosen scalar backend.
    #[error("{0} is not representable exactly; use the floating-point backend")]
    NotRepresentable(&'static str),
    #[error("exponent must be at least {min}, got {got}")]
    BadExponent { min: u32, got: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
