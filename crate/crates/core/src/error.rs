//! Error types shared across the toolkit.

use thiserror::Error;

/// Error cases surfaced by evaluators, branch constructors and the verifier.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid parameters, points outside the admissible domain, or series
    /// arguments outside the radius of convergence.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series evaluation exhausted its term budget. Carries the best
    /// partial value and the truncation estimate at the point of exhaustion.
    #[error("series did not converge after {terms_used} terms (best value {value:e}, truncation estimate {truncation_estimate:e})")]
    Convergence {
        value: f64,
        terms_used: usize,
        truncation_estimate: f64,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Exit-code class used by front-ends: 2 for domain, 3 for convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 2,
            Error::Convergence { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
