use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("digraph has a directed cycle through nodes {cycle:?}")]
    Cyclic { cycle: Vec<usize> },

    #[error("matrix is not in M({n}): principal minor on index set {subset:?} vanishes")]
    NotInMn { n: usize, subset: Vec<usize> },

    #[error("non-singularity condition fails: {0}")]
    NotCharacteristic(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} = {requested} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
