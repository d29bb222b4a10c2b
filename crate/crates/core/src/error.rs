use thiserror::Error;

/// Errors from the exact-arithmetic half (permutations, group ring, tableaux,
/// tensors).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree {0} out of range (must be 1..=8)")]
    DegreeOutOfRange(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("embedding out of range: offset {offset} + degree {degree} exceeds target degree {target}")]
    EmbedOutOfRange {
        offset: usize,
        degree: usize,
        target: usize,
    },
    #[error("tensor dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("unknown named element: {0}")]
    UnknownName(String),
    #[error("invalid rational literal: {0}")]
    InvalidRational(String),
}

/// Errors from the geometric half (metric evaluation and frame construction).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("metric is singular at the evaluation point (pivot {pivot:e})")]
    SingularMetric { pivot: f64 },
    #[error("coordinate field ∂_t is not timelike at the evaluation point (g00 = {g00})")]
    NonTimelike { g00: f64 },
    #[error("metric '{0}' is not stationary; the check requires a t-independent metric")]
    NotStationary(String),
    #[error("coordinates are not synchronized at the evaluation point: {0}")]
    NotSynchronized(String),
    #[error("unknown metric '{0}'")]
    UnknownMetric(String),
    #[error("metric parameter error: {0}")]
    BadParameter(String),
}
