use thiserror::Error;

/// Errors raised by the geometric and order-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("affine subspace of codimension {0} is not a hyperplane")]
    NotHyperplane(usize),

    #[error("a reflection root must be nonzero")]
    ZeroRoot,

    #[error("points coincide")]
    CoincidentPoints,

    #[error("point is fixed by the isometry")]
    FixedPoint,

    #[error("expected an {expected} isometry")]
    WrongIsometryType { expected: &'static str },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("factorization is not minimal: {0}")]
    NotMinimal(String),

    #[error("factor product does not equal the target isometry")]
    ProductMismatch,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("duplicate position {0}")]
    DuplicatePosition(usize),

    #[error("element is not below the top of the context")]
    NotBelowTop,

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
