use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Exit status for validation failures.
pub const EXIT_VALIDATION: u8 = 2;
/// Exit status for I/O failures.
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid {field}: {message}")]
    Validation {
        field: &'static str,
        message: String,
    },

    #[error("unknown preset {0:?} (expected chloroform-pd or sodium-gad)")]
    UnknownPreset(String),

    #[error("cannot parse {origin}: {message}")]
    Parse { origin: String, message: String },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error(transparent)]
    Model(#[from] bellcorr_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            _ => EXIT_VALIDATION,
        }
    }

    pub(crate) fn invalid(field: &'static str, message: impl Into<String>) -> Self {
        CliError::Validation {
            field,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
