use thiserror::Error;

use crate::kn::KnViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter 0 is not in the alphabet")]
    ZeroLetter,

    #[error("letter {letter} is outside the alphabet of rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },

    #[error("rank must be positive")]
    ZeroRank,

    #[error("column is not strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<i32>),

    #[error("column is not admissible at {z}")]
    NotSplittable { z: usize },

    #[error("{0:?} is not a partition")]
    NotPartition(Vec<i64>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a Kashiwara-Nakashima tableau: {0}")]
    NotKn(KnViolation),

    #[error("weight has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },

    #[error("{0:?} is not a signed permutation window")]
    NotSignedPermutation(Vec<i32>),

    #[error("weights {0:?} and {1:?} lie in different orbits")]
    DifferentOrbits(Vec<i32>, Vec<i32>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("pair is not a frank two-column configuration: {0}")]
    NotFrank(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }

    /// Short machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroLetter => "zero-letter",
            Error::LetterOutOfRange { .. } => "letter-out-of-range",
            Error::ZeroRank => "zero-rank",
            Error::NotStrictlyIncreasing(_) => "column-not-strict",
            Error::NotSplittable { .. } => "not-admissible",
            Error::NotPartition(_) => "not-partition",
            Error::NotContained { .. } => "not-contained",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::NotKn(v) => v.code(),
            Error::WeightLength { .. } => "weight-length",
            Error::NotSignedPermutation(_) => "not-signed-permutation",
            Error::DifferentOrbits(..) => "different-orbits",
            Error::Parse(_) => "parse",
            Error::NotFrank(_) => "not-frank",
            Error::Invariant(_) => "invariant",
        }
    }
}
