//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid solver configuration (grid/spec pairing, bad parameter ranges).
    #[error("configuration error: {0}")]
    Config(String),

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Convergence budget exhausted before the requested tolerance was met.
    /// Carries the best estimate and the tolerance actually achieved.
    #[error("accuracy error: requested {requested:.3e}, achieved {achieved:.3e} (best estimate {best:.12e})")]
    Accuracy {
        requested: f64,
        achieved: f64,
        best: f64,
    },

    /// A hard resource cap was hit (iteration counts, band cutoffs).
    #[error("resource error: {0}")]
    Resource(String),

    /// Table/report persistence failure.
    #[error("persistence error: {0}")]
    Persist(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Persist(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
