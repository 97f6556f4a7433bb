use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the constructions, the verification engine and the job runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A sufficient condition required by a construction does not hold.
    /// `condition` names it (e.g. "cc2", "majorization").
    #[error("condition {condition} violated: {detail}")]
    Gate { condition: String, detail: String },

    #[error("eigenvalue iteration did not converge after {iterations} iterations ({} of {} eigenvalues found)", .partial.len(), .order)]
    NonConvergence {
        iterations: usize,
        order: usize,
        partial: Vec<Complex64>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn gate(condition: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Gate {
            condition: condition.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
