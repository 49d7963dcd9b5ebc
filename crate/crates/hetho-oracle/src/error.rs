use hetho_core::ConfigError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("invalid serving geometry: {0}")]
    BadGeometry(String),
    /// The area integrator hit its depth limit before reaching the requested
    /// tolerance; retry with a finer resolution.
    #[error("area resolution too coarse: achieved {achieved:.3e}, requested {requested:.3e}")]
    ResolutionTooCoarse { achieved: f64, requested: f64 },
}
