//! Error type shared by every module of the engine.

use thiserror::Error;

/// Failures raised by the arithmetic core and the formula layers above it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The divisor does not divide the dividend exactly.
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    /// A denominator factor `1 - m` has a part `m` of series degree zero.
    #[error("bad denominator: {0}")]
    BadDenominator(String),

    /// A result that must be a polynomial acquired a negative exponent.
    #[error("negative exponent: {0}")]
    NegativeExponent(String),

    /// A coefficient that must be an integer is a proper fraction.
    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),

    /// A coefficient that must be non-negative is negative.
    #[error("negative coefficient: {0}")]
    NegativeCoefficient(String),

    /// Two series with different series variables were combined.
    #[error("series variable mismatch: {0} vs {1}")]
    SeriesVarMismatch(String, String),

    /// A substitution could not be carried out.
    #[error("substitution failed: {0}")]
    Substitution(String),

    /// The genus is outside the supported range `g >= 2`.
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),

    /// The requested wall is not a critical value for the degree.
    #[error("{wall} is not a critical value for degree {d}")]
    NotAWall { d: i64, wall: i64 },

    /// An index set was requested for a degree of the wrong parity.
    #[error("index set {kind} requires {expected} degree, got {d}")]
    ParityMismatch { kind: String, expected: &'static str, d: i64 },

    /// A splitting `(d1, d2)` does not belong to the required index set.
    #[error("({d1}, {d2}) is not in the index set {kind}")]
    IndexNotInSet { d1: i64, d2: i64, kind: String },

    /// The infinity regime of the poles variant needs `gamma > d`.
    #[error("pole order {gamma} is too small for degree {d} in the infinity regime")]
    PoleOrderTooSmall { d: i64, gamma: i64 },

    /// A product that must be a polynomial has terms beyond the expected degree.
    #[error("truncation check failed: nonzero coefficient at series degree {0}")]
    TruncationNotZero(usize),

    /// A stability parameter sits exactly on a wall.
    #[error("sigma is a critical value")]
    CriticalSigma,

    /// An input string or document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A parameter is outside the range the operation accepts.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
