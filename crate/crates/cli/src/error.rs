use thiserror::Error;

/// CLI failures, each tied to a process exit code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("{0}")]
    Divergent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Divergent(_) => 4,
        }
    }
}

impl From<oscbath::Error> for CliError {
    fn from(e: oscbath::Error) -> Self {
        use oscbath::Error as E;
        match e {
            E::InvalidParameter(_) | E::NonFinite(_) | E::Domain(_) | E::BranchCut { .. } => {
                CliError::Config(e.to_string())
            }
            E::Divergent(_) | E::DivergentSeries { .. } => CliError::Divergent(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}
