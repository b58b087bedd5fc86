use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three groups, see [`Error::kind`]: malformed input,
/// violated preconditions on otherwise well-formed data, and internal
/// invariant violations that indicate a bug in the polyhedral kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a quiver needs at least one vertex")]
    EmptyQuiver,
    #[error("vertex index {index} out of range for a quiver with {vertices} vertices")]
    VertexOutOfRange { index: usize, vertices: usize },
    #[error("arrow multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("dimension vectors are nonnegative, found {value} at position {index}")]
    NegativeEntry { index: usize, value: i64 },

    #[error("the dimension vector must be nonzero")]
    ZeroDimensionVector,
    #[error("{e:?} is not a subdimension vector of {d:?}")]
    NotSubdimension { e: Vec<i64>, d: Vec<i64> },
    #[error("{e:?} must be a nonzero proper subdimension vector of {d:?}")]
    NotProperSubdimension { e: Vec<i64>, d: Vec<i64> },
    #[error("{0:?} is divisible")]
    Divisible(Vec<i64>),
    #[error("stability parameter does not pair to zero with the dimension vector")]
    NotInStabilitySpace,
    #[error("stability parameter `{0}` is not in the semistable cone")]
    NotSemistable(&'static str),
    #[error("point is not in the support of the fan")]
    NotInSupport,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation requires a {expected}-dimensional stability space, found {found}")]
    WrongStabilityDimension { expected: usize, found: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Precondition,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::EmptyQuiver
            | Error::VertexOutOfRange { .. }
            | Error::ZeroMultiplicity
            | Error::LengthMismatch { .. }
            | Error::NegativeEntry { .. } => ErrorKind::Input,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
