use hetho_core::ConfigError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalyticError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    /// The adaptive integrator exhausted its subdivision budget before
    /// reaching the requested tolerance.
    #[error("quadrature for {context} did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    NonConvergence { context: &'static str, achieved: f64, requested: f64 },
    #[error("invalid quadrature settings: {0}")]
    BadSpec(String),
}
