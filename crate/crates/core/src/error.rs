use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<i64>),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("inexact division in Demazure operator {index}")]
    InexactDivision { index: usize },
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),
    #[error("pattern is not left-strict")]
    NotLeftStrict,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("vertex at row {row}, column {col} is not admissible: {reason}")]
    NonAdmissible { row: usize, col: usize, reason: String },
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("Boltzmann weights are not defined for the {0} family")]
    WeightsUndefined(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
