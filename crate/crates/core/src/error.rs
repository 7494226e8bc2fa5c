use thiserror::Error;

use crate::spacetime::RegimeReport;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter failed its precondition (non-finite, out of range, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The quasiflat-regime approximations do not hold for this scenario.
    #[error("regime violation: {0}")]
    Regime(RegimeReport),

    /// The Fock-basis truncation left too much probability in the tail.
    #[error("truncation dimension {dim} too small: tail mass {tail_mass:.3e}")]
    TruncationTooSmall { dim: usize, tail_mass: f64 },

    /// The requested quantity carries no information (zero derivative, zero throat).
    #[error("no signal: {0}")]
    NoSignal(String),

    /// An internal numerical failure (degenerate density, non-finite result).
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
