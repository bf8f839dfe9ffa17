//! Crate-wide error taxonomy.
//!
//! Every failure mode a caller can act on gets its own variant; the CLI maps
//! variants onto stable process exit codes (see [`Error::exit_code`]).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text: graph files, model files, CLI literals.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input that violates an operation's preconditions
    /// (loops where a simple graph is required, color out of range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Evaluation point lies on or outside the zero-free disk, so the
    /// logarithm prefix carries no approximation guarantee.
    #[error("evaluation point outside zero-free disk: {0}")]
    OutOfDisk(String),

    /// Model parameters leave the certified contraction region.
    #[error("parameters outside certified region: {0}")]
    OutOfRegion(String),

    /// A constant the run needs was neither derivable nor supplied.
    #[error("missing constant: {0}")]
    MissingConstant(String),

    /// An internal algebraic contract failed (constant term not one, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Work or memory estimate exceeded the configured cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable exit code contract: 1 parse, 2 domain/contract, 3 resources.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::ResourceLimit(_) => 3,
            _ => 2,
        }
    }
}
