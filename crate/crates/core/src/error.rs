use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("no eigenvalue within {tol:e} of {target}")]
    EigenvalueNotFound { target: f64, tol: f64 },

    #[error("unsupported sector: {0}")]
    UnsupportedSector(String),

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("no convergence after {iterations} iterations (residual {residual:e}): {reason}")]
    Convergence {
        iterations: usize,
        residual: f64,
        reason: String,
    },

    #[error("logarithm branch could not be resolved: residue {residue:e} exceeds {threshold:e}")]
    BranchResolution { residue: f64, threshold: f64 },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
