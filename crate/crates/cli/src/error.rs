use gt_core::ErrorClass;
use thiserror::Error;

/// Errors surfaced by the command layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gt_core::Error),
}

impl CliError {
    /// Process exit code: 1 negative finding, 2 input error, 3 budget or cap, 4 invariant violation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Core(e) => match e.class() {
                ErrorClass::Input => 2,
                ErrorClass::Negative => 1,
                ErrorClass::Resource => 3,
                ErrorClass::Violation => 4,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
