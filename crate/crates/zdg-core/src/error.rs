use thiserror::Error;

use crate::threshold::ForbiddenWitness;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("enumeration cap exceeded: {needed} elements needed, cap is {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("pattern search cap exceeded: pattern has {size} vertices, cap is {cap}")]
    SearchCapExceeded { size: usize, cap: usize },

    #[error("invalid ring descriptor: {0}")]
    Descriptor(String),

    #[error("ring axiom violated ({law}): witness ({a}, {b}, {c})")]
    AxiomViolation {
        law: &'static str,
        a: String,
        b: String,
        c: String,
    },

    #[error("element does not belong to this ring: {0}")]
    RingMismatch(String),

    #[error("ideal is not nilpotent: powers of {witness} never reach zero")]
    NotNilpotent { witness: String },

    #[error("graph is not threshold: induced {} on {:?}", witness.pattern, witness.vertices)]
    NotThreshold { witness: ForbiddenWitness },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable process exit code for the CLI: 2 for bad input, 3 for resource caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::SearchCapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
