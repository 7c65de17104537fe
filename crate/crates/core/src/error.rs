use thiserror::Error;

pub type Result<T, E = PidError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum PidError {
    /// The requested source count exceeds what the combinatorics support.
    #[error("source count {n} out of range: supported range is 1..={max}")]
    Capacity { n: usize, max: usize },

    #[error("antichain {antichain} is outside the domain of {context}")]
    Domain { context: String, antichain: String },

    #[error("invalid antichain: {0}")]
    InvalidAntichain(String),

    #[error("invalid parthood distribution: {0}")]
    InvalidParthood(String),

    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("incomplete measure for {concept}: missing {missing}")]
    Completeness { concept: String, missing: String },

    #[error("measure violates {identity} at {antichain}: expected {expected}, got {actual} (tolerance {tolerance})")]
    BoundaryViolation {
        identity: String,
        antichain: String,
        expected: f64,
        actual: f64,
        tolerance: f64,
    },

    #[error("Moebius inversion requires a full lattice, got a {0}")]
    UnsupportedStructure(String),

    #[error("consistency equation violated at {subset}: residual {residual}")]
    Inconsistent { subset: String, residual: f64 },

    #[error("{concept} has no nesting lattice")]
    NoLattice { concept: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
