use hetho_core::ConfigError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("invalid simulation setup: {0}")]
    BadSetup(String),
    #[error("estimation failed: {0}")]
    Estimation(String),
}
