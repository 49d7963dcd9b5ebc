use thiserror::Error;

/// Validation and ingestion failures for network configurations.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("tier list must not be empty")]
    EmptyTiers,
    #[error("tier {tier}: pathloss exponent must exceed 2 (got {value})")]
    PathlossTooSmall { tier: usize, value: f64 },
    #[error("tier {tier}: density must be positive and finite (got {value})")]
    BadDensity { tier: usize, value: f64 },
    #[error("tier {tier}: power must be positive and finite (got {value})")]
    BadPower { tier: usize, value: f64 },
    #[error("tier {tier}: bias must be positive and finite (got {value})")]
    BadBias { tier: usize, value: f64 },
    #[error("user density must be nonnegative and finite (got {0})")]
    BadUserDensity(f64),
    #[error("region area must be positive and finite (got {0})")]
    BadRegionArea(f64),
    #[error("propagation constant {name} must be positive and finite (got {value})")]
    BadPropagation { name: &'static str, value: f64 },
    #[error("speed model: {0}")]
    BadSpeed(String),
    #[error("per-tier list has {got} entries but the config has {expected} tiers")]
    PerTierLengthMismatch { got: usize, expected: usize },
    #[error("tier index {index} out of range for {count} tiers")]
    TierIndex { index: usize, count: usize },
    #[error("operation requires all tiers to share one pathloss exponent (found {0} and {1})")]
    MixedExponents(f64, f64),
    #[error("config parse error: {0}")]
    Parse(String),
}
