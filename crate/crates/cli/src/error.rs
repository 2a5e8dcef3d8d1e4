use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or input; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Core(arq_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<arq_core::Error> for CliError {
    fn from(e: arq_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(arq_core::Error::TheoremViolation(_)) => 1,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}
