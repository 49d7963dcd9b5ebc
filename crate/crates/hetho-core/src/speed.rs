use crate::error::ConfigError;
use serde::{Deserialize, Serialize};

/// Marginal speed law of the walking model.
///
/// Only the mean enters the analytic rates; the simulator samples the full
/// law. `Table` is a discrete distribution given as (speed, weight) pairs,
/// weights need not be normalized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpeedLaw {
    Constant {
        value: f64,
    },
    /// Uniform on [0, 2·mean].
    Uniform {
        mean: f64,
    },
    Table {
        points: Vec<(f64, f64)>,
    },
}

impl SpeedLaw {
    pub fn mean(&self) -> f64 {
        match self {
            SpeedLaw::Constant { value } => *value,
            SpeedLaw::Uniform { mean } => *mean,
            SpeedLaw::Table { points } => {
                let wsum: f64 = points.iter().map(|(_, w)| w).sum();
                points.iter().map(|(v, w)| v * w).sum::<f64>() / wsum
            }
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |msg: String| Err(ConfigError::BadSpeed(msg));
        match self {
            SpeedLaw::Constant { value } => {
                if !(value.is_finite() && *value >= 0.0) {
                    return bad(format!("constant speed must be >= 0, got {value}"));
                }
            }
            SpeedLaw::Uniform { mean } => {
                if !(mean.is_finite() && *mean >= 0.0) {
                    return bad(format!("uniform mean speed must be >= 0, got {mean}"));
                }
            }
            SpeedLaw::Table { points } => {
                if points.is_empty() {
                    return bad("speed table must not be empty".into());
                }
                for &(v, w) in points {
                    if !(v.is_finite() && v >= 0.0) {
                        return bad(format!("speed table entry has speed {v}, must be >= 0"));
                    }
                    if !(w.is_finite() && w >= 0.0) {
                        return bad(format!("speed table entry has weight {w}, must be >= 0"));
                    }
                }
                let wsum: f64 = points.iter().map(|(_, w)| w).sum();
                if wsum <= 0.0 {
                    return bad("speed table weights sum to zero".into());
                }
            }
        }
        Ok(())
    }
}

/// Speed law plus optional per-tier overrides. A handover out of tier m uses
/// the tier-m law when an override list is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeedModel {
    pub default: SpeedLaw,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_tier: Option<Vec<SpeedLaw>>,
}

impl SpeedModel {
    pub fn uniform(mean: f64) -> Self {
        Self { default: SpeedLaw::Uniform { mean }, per_tier: None }
    }

    pub fn constant(value: f64) -> Self {
        Self { default: SpeedLaw::Constant { value }, per_tier: None }
    }

    /// Law governing UEs currently served by `tier`.
    pub fn law_for_tier(&self, tier: usize) -> &SpeedLaw {
        match &self.per_tier {
            Some(list) => list.get(tier).unwrap_or(&self.default),
            None => &self.default,
        }
    }

    pub fn mean_for_tier(&self, tier: usize) -> f64 {
        self.law_for_tier(tier).mean()
    }

    pub fn validate(&self, tier_count: usize) -> Result<(), ConfigError> {
        self.default.validate()?;
        if let Some(list) = &self.per_tier {
            if list.len() != tier_count {
                return Err(ConfigError::PerTierLengthMismatch {
                    got: list.len(),
                    expected: tier_count,
                });
            }
            for law in list {
                law.validate()?;
            }
        }
        Ok(())
    }
}

/// UE density model: one global density, or one density per serving tier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UserDensityModel {
    /// Use `NetworkConfig::user_density` for every tier.
    Uniform,
    /// Per-tier densities f_{m,u}, per m².
    PerTier { densities: Vec<f64> },
}

impl UserDensityModel {
    /// Density of UEs whose handovers out of `tier` are counted.
    pub fn density_for_tier(&self, tier: usize, uniform_density: f64) -> f64 {
        match self {
            UserDensityModel::Uniform => uniform_density,
            UserDensityModel::PerTier { densities } => {
                densities.get(tier).copied().unwrap_or(uniform_density)
            }
        }
    }

    pub fn validate(&self, tier_count: usize) -> Result<(), ConfigError> {
        if let UserDensityModel::PerTier { densities } = self {
            if densities.len() != tier_count {
                return Err(ConfigError::PerTierLengthMismatch {
                    got: densities.len(),
                    expected: tier_count,
                });
            }
            for &d in densities {
                if !(d.is_finite() && d >= 0.0) {
                    return Err(ConfigError::BadUserDensity(d));
                }
            }
        }
        Ok(())
    }
}
