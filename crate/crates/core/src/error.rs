use thiserror::Error;

/// Errors raised by constructors, predicates and solvers in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("point lies on the boundary of the domain (d(x) = 0)")]
    OnBoundary,

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("invalid radius {0}: must be positive and finite")]
    InvalidRadius(f64),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("window too small: the set touches the window border")]
    WindowTooSmall,

    #[error("bracket invalid: {0}")]
    InvalidBracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;
