use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("strip size must be positive")]
    ZeroStripSize,

    #[error("{outer} does not contain {inner}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("{outer}/{inner} is not a border strip: {reason}")]
    NotBorderStrip {
        outer: Partition,
        inner: Partition,
        reason: &'static str,
    },

    #[error("partition {partition} has nonempty {k}-core {core}")]
    NonEmptyCore {
        partition: Partition,
        k: usize,
        core: Partition,
    },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{k} does not divide {n}")]
    NotDivisible { k: usize, n: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
