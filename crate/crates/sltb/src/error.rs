use thiserror::Error;
use trust_sim::SimError;

/// Top-level failure classes of the experiment runner, mapped onto
/// process exit codes: I/O and schema problems exit 1, invariant
/// violations detected mid-simulation exit 2.
#[derive(Debug, Error)]
pub enum AppError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("records schema mismatch: {0}")]
    Schema(String),
    #[error(transparent)]
    Invariant(#[from] SimError),
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Io(_) | AppError::Schema(_) => 1,
            AppError::Invariant(_) => 2,
        }
    }
}
