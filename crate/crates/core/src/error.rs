use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested search exceeds the desk-scale limits.
    #[error("search too large: {0}")]
    Infeasible(String),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
