use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the numerical routines and the experiment runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension {dim} does not factor as {d_a} x {d_b}")]
    Factorization { dim: usize, d_a: usize, d_b: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a state: minimum eigenvalue {0:.3e}")]
    NotAState(f64),

    #[error("not normalized: trace {0}")]
    Normalization(f64),

    #[error("states are identical (trace distance {0:.3e}); Jordan-Hahn parts undefined")]
    IdenticalStates(f64),

    #[error("operator is not an orthogonal projector (defect {0:.3e})")]
    NotProjector(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numerical fault: {0}")]
    NumericalFault(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
