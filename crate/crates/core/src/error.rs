use thiserror::Error;

/// Errors shared across the crate's modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid point: all coordinates are zero")]
    InvalidPoint,

    #[error("invalid configuration: {0:?}")]
    InvalidConfig(Vec<crate::points::Violation>),

    #[error("cannot sample {requested} distinct points in P^{dim} with height {height}")]
    CannotSample {
        requested: usize,
        dim: usize,
        height: u32,
    },

    #[error("improper hyperplane configuration: {0}")]
    ImproperConfiguration(String),

    #[error("variable list mismatch between monomial ideals")]
    VariableMismatch,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("generator list incomplete: generators needed up to degree {needed}, supplied up to {supplied}")]
    InsufficientGenerators { needed: usize, supplied: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
