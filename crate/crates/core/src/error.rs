use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p must be an odd integer >= 3, got {0}")]
    InvalidP(u64),

    #[error("order n must be >= 1")]
    InvalidOrder,

    #[error("diagonal index j={j} out of range 1..={max}")]
    DiagIndexOutOfRange { j: u32, max: u32 },

    #[error("coefficient index j={j} out of range 1..={n}")]
    CoeffIndexOutOfRange { j: u32, n: u32 },

    #[error("matrix is not unitary: |a|^2+|b|^2 deviates from 1 by {residual:e} (tolerance {tol:e})")]
    NotUnitary { residual: f64, tol: f64 },

    #[error("matrix columns are not orthonormal within {tol:e}")]
    NotUnitaryMatrix { tol: f64 },

    #[error("word is not in the expected {expected} form")]
    WrongWordForm { expected: &'static str },

    #[error("word invariant violated: {0}")]
    MalformedWord(String),

    #[error("cannot parse gate word: {0}")]
    WordParse(String),

    #[error("iteration count K must be >= 1")]
    InvalidIterationCount,

    #[error(
        "polynomial degree {degree} must be strictly less than d={d}; \
         the alternating binomial sum is nonzero ({sum})"
    )]
    RuizDegree { degree: usize, d: u64, sum: BigInt },

    #[error("a factor of the product is within {tol:e} of zero at k={k}")]
    DegenerateFactor { k: u64, tol: f64 },
}
