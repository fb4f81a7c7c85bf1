use std::path::PathBuf;

use pcdyn_core::PcError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] PcError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: PcError },
    #[error("algorithms disagree on {group}/{instance}: {detail}")]
    Disagreement { group: String, instance: String, detail: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

impl HarnessError {
    /// 0 success, 1 input error, 2 invariant breach, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(e) | Self::File { source: e, .. } => match e {
                PcError::Invariant(_) => 2,
                PcError::BudgetExceeded { .. } => 3,
                _ => 1,
            },
            Self::Disagreement { .. } => 2,
            Self::Io { .. } | Self::Usage(_) | Self::Csv(_) => 1,
        }
    }
}
