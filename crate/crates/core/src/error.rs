//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by filtering, scoring, search, and file handling.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument or domain violation (dimension mismatch, bad grid, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An observation, covariate, or derived quantity was NaN or infinite.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// The scaled forecast variance collapsed to a non-positive value.
    #[error("covariance breakdown at t={t}: scaled forecast variance {qstar}")]
    CovarianceBreakdown { t: usize, qstar: f64 },

    /// A data or score file failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An iteration, node, or time cap was exceeded before the work finished.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The LP engine hit a numerical failure it could not recover from.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
