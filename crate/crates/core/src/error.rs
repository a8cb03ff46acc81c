use thiserror::Error;

/// Errors raised by the algebra, solver and I/O layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::MAX_DIM)]
    DimensionLimit(usize),

    /// An operation was applied to an algebra whose chirality does not allow it.
    #[error("chirality mismatch: {0}")]
    Chirality(String),

    #[error("coboundary operator of arity {0} is not supported (only 0, 1 and 2)")]
    UnsupportedArity(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
