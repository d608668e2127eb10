use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cannot lift a vector of dimension {dim} to dimension {target}: {target} is not a multiple of {dim}")]
    NotAMultiple { dim: usize, target: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A ∈ M_{m×n} is dimension-bounded iff m | n.
    #[error(
        "matrix of shape {rows}x{cols} is not dimension-bounded ({rows} does not divide {cols})"
    )]
    NotDimensionBounded { rows: usize, cols: usize },

    #[error("V_{dim} is not invariant under A: column {column} maps into V_{image_dim}")]
    NotInvariant {
        dim: usize,
        column: usize,
        image_dim: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{value} exceeds the factorization limit {limit}")]
    FactorTooLarge { value: u64, limit: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Precondition violations, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotDimensionBounded { .. } | Error::NotInvariant { .. }
        )
    }
}
