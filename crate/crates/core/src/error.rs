//! Error type shared by every module in the crate.

use std::fmt;

/// Crate-wide error enumeration.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A kernel parameter or norm index violates its contract. Carries the
    /// offending field so callers can report precisely what was rejected.
    InvalidParams { field: &'static str, reason: String },
    /// The parameters are valid but the requested operation has no meaning
    /// in this regime (e.g. a closed form outside its validity conditions).
    OutOfRegime { reason: String },
    /// A numerical procedure failed its own convergence self-check.
    NumericFailure { reason: String },
    /// A scalar argument is outside the mathematical domain of a function.
    Domain { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams { field, reason } => {
                write!(f, "invalid parameter `{field}`: {reason}")
            }
            Error::OutOfRegime { reason } => write!(f, "out of regime: {reason}"),
            Error::NumericFailure { reason } => write!(f, "numeric failure: {reason}"),
            Error::Domain { reason } => write!(f, "domain error: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn out_of_regime(reason: impl Into<String>) -> Self {
        Error::OutOfRegime {
            reason: reason.into(),
        }
    }

    pub(crate) fn numeric(reason: impl Into<String>) -> Self {
        Error::NumericFailure {
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(reason: impl Into<String>) -> Self {
        Error::Domain {
            reason: reason.into(),
        }
    }
}
