use thiserror::Error;

/// Errors raised by the bound, quadrature and oracle routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A post-condition the code verifies at runtime failed. Signals a bug in
    /// branch or region logic rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),

    /// The simplex solver hit its iteration cap.
    #[error("simplex stalled after {iterations} iterations")]
    Stall { iterations: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
