use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} exceeds the configured cap of {limit}")]
    Resource { what: &'static str, limit: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("profile undefined for Δ=0")]
    EdgelessProfile,

    #[error("q must be nonzero")]
    ZeroActivity,

    #[error("root finder did not converge after {iterations} iterations (worst residual {worst_residual:e})")]
    NonConvergence {
        iterations: usize,
        worst_residual: f64,
        best: Vec<num_complex::Complex64>,
    },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
