use rbla_core::{CheckReport, Error};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A structure the command needs is absent from the document.
    #[error("missing {0}")]
    Missing(String),

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Rejected(_)) => 1,
            _ => 2,
        }
    }

    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            CliError::Core(e) => e.report(),
            _ => None,
        }
    }
}
