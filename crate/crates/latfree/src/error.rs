use std::path::Path;

use thiserror::Error;

/// Failures surfaced by the command-line tool. All of them exit with code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed simplex file: {0}")]
    Malformed(String),
    #[error("degenerate simplex: vertices are affinely dependent")]
    Degenerate,
    #[error("point budget exceeded: {0}")]
    Budget(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("arithmetic overflow: coordinates too large for exact 64-bit arithmetic")]
    Overflow,
    #[error("{0}")]
    Core(latfree_core::Error),
    #[error("{path}: {source}")]
    InFile {
        path: String,
        #[source]
        source: Box<CliError>,
    },
}

impl CliError {
    pub fn in_file(self, path: &Path) -> CliError {
        CliError::InFile {
            path: path.display().to_string(),
            source: Box::new(self),
        }
    }
}

impl From<latfree_core::Error> for CliError {
    fn from(e: latfree_core::Error) -> Self {
        use latfree_core::Error as E;
        match e {
            E::Degenerate => CliError::Degenerate,
            E::Overflow => CliError::Overflow,
            E::BoxTooLarge { .. } | E::SearchTooLarge { .. } => CliError::Budget(e.to_string()),
            E::DimensionMismatch { .. } | E::InvalidInput(_) | E::NotSquare { .. } => {
                CliError::Malformed(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}
