//! On-disk config format.
//!
//! Files use km-based units (BS and UE densities per km², region area in
//! km²) because deployment figures are quoted that way; everything is
//! converted to SI once on ingestion. The parsed [`ConfigFile`] is kept as
//! the canonical form so a dump/reload cycle is bit-identical.

use crate::config::{NetworkConfig, PropagationConstants, TierParams};
use crate::error::ConfigError;
use crate::speed::{SpeedLaw, SpeedModel, UserDensityModel};
use serde::{Deserialize, Serialize};

pub const PER_KM2_TO_PER_M2: f64 = 1e-6;
pub const KM2_TO_M2: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TierFile {
    pub density_per_km2: f64,
    pub power: f64,
    pub alpha: f64,
    pub bias: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpeedFile {
    /// Every UE moves at exactly `mean_mps`.
    Constant { mean_mps: f64 },
    /// Uniform on [0, 2·mean_mps].
    Uniform { mean_mps: f64 },
    /// Discrete (speed m/s, weight) table.
    Table { points: Vec<(f64, f64)> },
}

impl SpeedFile {
    fn to_law(&self) -> SpeedLaw {
        match self {
            SpeedFile::Constant { mean_mps } => SpeedLaw::Constant { value: *mean_mps },
            SpeedFile::Uniform { mean_mps } => SpeedLaw::Uniform { mean: *mean_mps },
            SpeedFile::Table { points } => SpeedLaw::Table { points: points.clone() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropagationFile {
    #[serde(rename = "L0")]
    pub l0: f64,
    pub r0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wavelength_m: Option<f64>,
}

impl Default for PropagationFile {
    fn default() -> Self {
        Self { l0: 1.0, r0: 1.0, wavelength_m: None }
    }
}

/// Root of the JSON config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub tiers: Vec<TierFile>,
    pub user_density_per_km2: f64,
    pub region_area_km2: f64,
    pub speed: SpeedFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub speed_per_tier: Option<Vec<SpeedFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub user_density_per_tier_per_km2: Option<Vec<f64>>,
    #[serde(default)]
    pub propagation: PropagationFile,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        // serde_json cannot fail on this struct
        serde_json::to_string_pretty(self).expect("config serialization")
    }

    /// Convert to validated SI-unit models.
    pub fn build(&self) -> Result<(NetworkConfig, SpeedModel, UserDensityModel), ConfigError> {
        let tiers = self
            .tiers
            .iter()
            .map(|t| TierParams {
                density: t.density_per_km2 * PER_KM2_TO_PER_M2,
                power: t.power,
                pathloss_exponent: t.alpha,
                bias: t.bias,
            })
            .collect();
        let propagation = PropagationConstants {
            reference_loss: self.propagation.l0,
            reference_distance: self.propagation.r0,
            wavelength: self.propagation.wavelength_m.unwrap_or(0.125),
        };
        let cfg = NetworkConfig {
            tiers,
            propagation,
            user_density: self.user_density_per_km2 * PER_KM2_TO_PER_M2,
            region_area: self.region_area_km2 * KM2_TO_M2,
        }
        .validated()?;

        let speed = SpeedModel {
            default: self.speed.to_law(),
            per_tier: self
                .speed_per_tier
                .as_ref()
                .map(|list| list.iter().map(|s| s.to_law()).collect()),
        };
        speed.validate(cfg.tier_count())?;

        let users = match &self.user_density_per_tier_per_km2 {
            None => UserDensityModel::Uniform,
            Some(list) => UserDensityModel::PerTier {
                densities: list.iter().map(|d| d * PER_KM2_TO_PER_M2).collect(),
            },
        };
        users.validate(cfg.tier_count())?;

        Ok((cfg, speed, users))
    }

    /// The two-tier reference deployment used throughout the tests and docs:
    /// tier 1 {1/km², P=1}, tier 2 {2/km², P=0.2}, α=3.5, B=1, f_u=100/km²,
    /// S=1 km², uniform speed with 5 m/s mean.
    pub fn two_tier_reference() -> Self {
        ConfigFile {
            tiers: vec![
                TierFile { density_per_km2: 1.0, power: 1.0, alpha: 3.5, bias: 1.0 },
                TierFile { density_per_km2: 2.0, power: 0.2, alpha: 3.5, bias: 1.0 },
            ],
            user_density_per_km2: 100.0,
            region_area_km2: 1.0,
            speed: SpeedFile::Uniform { mean_mps: 5.0 },
            speed_per_tier: None,
            user_density_per_tier_per_km2: None,
            propagation: PropagationFile::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_config_builds() {
        let (cfg, speed, _) = ConfigFile::two_tier_reference().build().unwrap();
        assert_eq!(cfg.tier_count(), 2);
        assert!((cfg.tiers[0].density - 1e-6).abs() < 1e-20);
        assert!((cfg.tiers[1].density - 2e-6).abs() < 1e-20);
        assert!((cfg.user_density - 1e-4).abs() < 1e-18);
        assert_eq!(cfg.region_area, 1e6);
        assert_eq!(speed.mean_for_tier(0), 5.0);
    }

    #[test]
    fn json_round_trip_is_identical() {
        let file = ConfigFile::two_tier_reference();
        let text = file.to_json();
        let reparsed = ConfigFile::from_json(&text).unwrap();
        assert_eq!(file, reparsed);
        let (a, ..) = file.build().unwrap();
        let (b, ..) = reparsed.build().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        let err = ConfigFile::from_json("{ not json").unwrap_err();
        assert!(matches!(err, ConfigError::Parse(_)));
    }

    #[test]
    fn unknown_keys_rejected() {
        let mut v: serde_json::Value =
            serde_json::from_str(&ConfigFile::two_tier_reference().to_json()).unwrap();
        v["typo_key"] = serde_json::json!(1);
        assert!(ConfigFile::from_json(&v.to_string()).is_err());
    }

    #[test]
    fn invalid_alpha_rejected_on_build() {
        let mut file = ConfigFile::two_tier_reference();
        file.tiers[0].alpha = 1.5;
        assert!(file.build().is_err());
    }
}
