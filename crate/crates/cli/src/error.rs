use std::io;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(diambound::Error),
    #[error("input graph is disconnected ({0} components); rerun with --lcc")]
    Disconnected(usize),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("no convergence: guard stopped the run after {0} iterations; best bounds printed remain valid")]
    NotConverged(usize),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) | CliError::Disconnected(_) | CliError::Io { .. } => 2,
            CliError::NotConverged(_) => 3,
        }
    }
}

impl From<diambound::Error> for CliError {
    fn from(e: diambound::Error) -> Self {
        use diambound::Error as E;
        match e {
            E::InvalidCriterion(m) | E::InvalidGenerator(m) | E::InvalidOptions(m) => CliError::Usage(m),
            other => CliError::Input(other),
        }
    }
}
