use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("not a simplex of the complex: {0:?}")]
    NotASimplex(Vec<usize>),

    #[error("the complex is a single simplex; use the abelian branch")]
    SingleSimplex,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a PBW series: {0}")]
    NotPbwSeries(String),

    #[error("weight window insufficient: {0}")]
    WindowTooSmall(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
