//! Library half of the `specnorm` command line tool: argument parsing,
//! matrix/CSV/SVG input and output, unit-circle table generation, and the
//! verification suites.

pub mod args;
pub mod circle;
pub mod io;
pub mod verify;

use std::fmt;

/// CLI-level errors, classified by exit code: usage and parse problems exit
/// with 2, domain errors raised by the engines exit with 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Io(std::io::Error),
    Domain(specnorm_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<specnorm_core::Error> for CliError {
    fn from(e: specnorm_core::Error) -> Self {
        match e {
            specnorm_core::Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::Domain(other),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
