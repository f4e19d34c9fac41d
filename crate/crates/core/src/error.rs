use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by configuration, lookup and export.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "resolution {res} must satisfy 0 < res < l_scale ({l_scale}); otherwise eta >= 1 and the \
         search radius grows every iteration instead of shrinking"
    )]
    EtaOutOfRange { res: f64, l_scale: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("unknown objective `{0}` (run `perchopt list` to see the registry)")]
    UnknownObjective(String),

    #[error(
        "unknown constrained problem `{0}` (expected cantilever, three-bar-truss or gear-train)"
    )]
    UnknownProblem(String),

    #[error("`{name}` does not accept {dims} dimension(s): {reason}")]
    Dimension {
        name: String,
        dims: usize,
        reason: &'static str,
    },

    #[error("`{0}` has no registered minimizer")]
    NoKnownMinimizer(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error on {}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("JSON error on {}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
