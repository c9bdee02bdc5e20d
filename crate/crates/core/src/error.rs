use thiserror::Error;

/// Errors raised by the combinatorial and representation-theoretic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {input:?}: {reason}")]
    MalformedPartition { input: String, reason: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("partition {partition} has {length} parts, more than the dimension {n}")]
    LengthExceedsDimension {
        partition: String,
        length: usize,
        n: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },

    #[error("partition {partition} is not {p}-regular")]
    NotPRegular { partition: String, p: u64 },

    #[error("size {size} exceeds the supported bound {bound}")]
    SizeGuard { size: u64, bound: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("negative multiplicity {mult} at weight {weight} in a non-virtual character")]
    NegativeMultiplicity { weight: String, mult: i64 },

    #[error("{0}")]
    OutOfScope(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
