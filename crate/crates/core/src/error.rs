use alloc::string::String;

use crate::Complex;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: Complex },
    #[error("{function}: {reason}")]
    Domain { function: &'static str, reason: String },
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("enumeration would exceed the cap of {cap} vectors")]
    EnumerationCap { cap: usize },
    #[error("{what} did not converge")]
    NonConvergence { what: &'static str },
    #[error("argument tracking failed to unwrap near t = {t}")]
    Unwrap { t: f64 },
    #[error("evaluation produced a non-finite value in {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    /// True for failures that a caller should report as non-convergence
    /// rather than as bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::Unwrap { .. } | Error::NonFinite(_) | Error::EnumerationCap { .. }
        )
    }
}
