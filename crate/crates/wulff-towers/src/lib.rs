//! File formats and command-line front end for `wulff-towers-core`.
//!
//! - [`input`]: domain and norm sources (built-in names or JSON files) and
//!   mass ranges;
//! - [`report`]: the JSON report written by `solve`;
//! - [`sweep`]: parallel energy sweeps and their CSV form;
//! - [`svg`]: nested-layer renderings;
//! - [`cli`]: argument definitions and the subcommand driver.

pub mod cli;
pub mod input;
pub mod report;
pub mod svg;
pub mod sweep;

use thiserror::Error;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<wulff_towers_core::Error> for CliError {
    fn from(e: wulff_towers_core::Error) -> Self {
        match e {
            wulff_towers_core::Error::InvariantViolation(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
