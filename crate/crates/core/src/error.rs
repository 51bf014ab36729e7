use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis must be at least 2, got {0}")]
    InvalidBasis(u64),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("cannot fire position {position}: part {part} is smaller than the basis {basis}")]
    FireUnderflow { position: usize, part: u64, basis: u64 },

    #[error("cannot unfire position {position}: part is zero")]
    UnfireUnderflow { position: usize },

    #[error("position {position} out of range for a partition of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("inconsistent value: expected {expected}, found {found}")]
    InconsistentValue { expected: u64, found: u64 },

    #[error("partition is not reachable from ({n}): shot recurrence is not exact")]
    UnreachablePartition { n: u64 },

    #[error("shot vector does not describe a partition of {n}: part {position} would be negative")]
    InvalidShotVector { n: u64, position: usize },

    #[error("inc by {i} requires the first {i} parts to equal {expected}")]
    IncPreconditionViolated { i: usize, expected: u64 },

    #[error("partition does not start with {i} parts equal to basis - 1")]
    NotInP { i: usize },

    #[error("basis^{i} does not divide {value}")]
    DivisibilityViolated { i: usize, value: u64 },

    #[error("resource cap of {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("argument must be positive")]
    ZeroArgument,

    #[error("vertex {vertex} holds fewer chips than its out-degree")]
    InsufficientChips { vertex: usize },

    #[error("vertex {vertex} holds a chip count that is not a multiple of basis^{vertex}")]
    IntegralityViolated { vertex: usize },

    #[error("mismatched basis: {0} vs {1}")]
    BasisMismatch(u64, u64),

    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
