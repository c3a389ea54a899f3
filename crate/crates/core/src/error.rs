use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least {min}, got {k}")]
    KTooSmall { k: usize, min: usize },

    /// No `kK2` fits in `K_{m,n}` when `k` exceeds the smaller part.
    #[error("no {k}K2 fits when the smaller part has {n} vertices")]
    KExceedsPart { k: usize, n: usize },

    #[error("orientation violated: expected m >= n, got m = {m}, n = {n}")]
    Orientation { m: usize, n: usize },

    #[error("part sizes must be positive, got m = {m}, n = {n}")]
    EmptyPart { m: usize, n: usize },

    #[error("part B has {n} vertices, at most {max} are supported")]
    PartTooLarge { n: usize, max: usize },

    #[error("{elements} edges exceed the oracle limit of {limit}")]
    LimitExceeded { elements: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
}

impl Error {
    /// Whether the error comes from malformed input data rather than from
    /// parameters outside the domain of a formula.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidGraph(_) | Error::InvalidColoring(_))
    }
}
