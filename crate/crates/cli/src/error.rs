use thiserror::Error;

/// Failure of a subcommand, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Domain(#[from] hyperint::Error),

    #[error("{failed} of {cases} verification cases failed")]
    Verification { failed: usize, cases: usize },

    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),

    #[error("cannot encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) | CliError::Output(_) | CliError::Json(_) => 2,
            CliError::Verification { .. } => 3,
        }
    }
}
