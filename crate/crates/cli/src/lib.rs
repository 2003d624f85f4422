//! Command implementations behind the `fivevertex` binary.

pub mod commands;
pub mod document;
pub mod render;

use thiserror::Error;

/// Errors carry their exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed flags or unusable input (exit 2).
    #[error("{0}")]
    Usage(String),
    /// Invalid state document (exit 2).
    #[error("{0}")]
    Document(String),
    /// Internal invariant violation (exit 1).
    #[error("internal error: {0}")]
    Internal(String),
    /// At least one verification check failed (exit 3).
    #[error("{0} verification report(s) failed")]
    CheckFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Document(_) => 2,
            CliError::Internal(_) => 1,
            CliError::CheckFailed(_) => 3,
        }
    }

    /// Library errors raised while checking user input.
    pub fn usage(e: fivevertex::Error) -> Self {
        match e {
            fivevertex::Error::Invariant(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }

    pub fn document(e: fivevertex::Error) -> Self {
        match e {
            fivevertex::Error::Invariant(m) => CliError::Internal(m),
            other => CliError::Document(other.to_string()),
        }
    }

    pub fn internal(e: fivevertex::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}
