use std::path::PathBuf;

use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] flagcalc::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "invalid_input",
            CliError::Io { .. } => "io_error",
            CliError::Json { .. } => "invalid_json",
            CliError::Core(e) => e.code(),
        }
    }

    /// 2 for usage and input problems, 3 for violated preconditions, 4 for
    /// internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.class() {
                flagcalc::ErrorClass::Precondition => 3,
                flagcalc::ErrorClass::Internal => 4,
            },
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "code": self.code(), "message": self.to_string() })
    }
}
