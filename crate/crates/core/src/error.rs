use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular map: {0}")]
    Singular(String),

    #[error("{0}")]
    Invalid(String),

    /// A construction whose defining identities do not hold. The report
    /// carries every violation found.
    #[error("construction refused: {}", .0.summary())]
    Rejected(Box<CheckReport>),
}

impl Error {
    pub fn rejected(report: CheckReport) -> Self {
        Error::Rejected(Box::new(report))
    }

    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Rejected(r) => Some(r),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_dim(what: &str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension(format!("{what}: expected {expected}, found {found}")));
    }
    Ok(())
}
