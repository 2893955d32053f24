use std::path::PathBuf;

/// Failures surfaced by the command-line driver.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error(transparent)]
    Numerical(#[from] casimir_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl AppError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for validation problems, 2 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        use casimir_core::Error as E;
        match self {
            Self::Validation(_) | Self::Io { .. } => 1,
            Self::Numerical(E::Config(_) | E::Domain(_) | E::Precondition(_)) => 1,
            Self::Numerical(_) => 2,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;
