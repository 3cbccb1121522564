use thiserror::Error;

/// Failures of the front end, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("theorem violation: {0}")]
    Violation(String),
    #[error("verification failed for {id}: {reason}")]
    Verification { id: String, reason: String },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 1 for a bug or failed check, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Violation(_) | CliError::Verification { .. } | CliError::Internal(_) => 1,
        }
    }

    pub(crate) fn verification(id: impl Into<String>, reason: impl ToString) -> Self {
        CliError::Verification {
            id: id.into(),
            reason: reason.to_string(),
        }
    }
}
