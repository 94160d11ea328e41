//! Error types shared across the crate.

use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("galois exponent {0} is not coprime to 13")]
    NotCoprime(i64),
    #[error("size mismatch: {left}x{left} against {right}x{right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("polynomial is not in the span of the basis; residual {residual}")]
    NotInSpan { residual: String },
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("degree bound violated: 4m+6n = {0} exceeds 12")]
    DegreeBound(u32),
    #[error("expected rational coefficients, found {0}")]
    NotRational(String),
    #[error("unknown form family `{0}`")]
    UnknownFamily(String),
    #[error("series has no invertible leading coefficient")]
    NonInvertibleSeries,
    #[error("exponent grid 1/{den} cannot represent {what}")]
    GridIncompatible { den: i64, what: String },
    #[error("unsupported Hauptmodul level {0}")]
    UnsupportedLevel(u32),
}

/// Failures of the command-line layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite `{0}` (try --list)")]
    UnknownSuite(String),
    #[error("truncation margin must be at least 5, got {0}")]
    MarginTooSmall(u32),
    #[error("jobs must be positive")]
    ZeroJobs,
    #[error("could not serialise report: {0}")]
    Json(#[from] serde_json::Error),
}
