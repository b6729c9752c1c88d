use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable lists do not match: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("polynomial division failed: {0} is not divisible by {1}")]
    NotDivisible(String, String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("determinant is not a unit multiple of a power of f: {0}")]
    DetNotPowerOfF(String),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("unsupported ring label: {0}")]
    UnsupportedRing(String),

    #[error("multiplicity did not stabilize up to s_max = {s_max}; raise s_max")]
    NoStabilization { s_max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("certificate verification failed: {0}")]
    Verification(String),

    #[error("missing syzygy witness for class {0}")]
    MissingSyzygyWitness(String),

    #[error("unknown class name: {0}")]
    UnknownClass(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
