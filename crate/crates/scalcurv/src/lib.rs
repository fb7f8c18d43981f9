//! File formats, catalog loading and the command-line front end for
//! [`scalcurv_core`].

use std::path::PathBuf;

pub mod loader;
pub mod manifest;
pub mod oracle;
pub mod output;
pub mod report;

pub use loader::{Catalog, Loader};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}:{line}:{column}: field `{field}`: {message}", path.display())]
    Parse { path: PathBuf, line: usize, column: usize, field: String, message: String },

    #[error("{0}")]
    Catalog(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] scalcurv_core::Error),
}

impl CliError {
    /// 1 for a failed validation, 2 for any input problem.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(scalcurv_core::Error::ValidationFailed(_)) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
