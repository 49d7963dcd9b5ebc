use crate::error::ConfigError;
use serde::{Deserialize, Serialize};

/// One base-station tier of the heterogeneous network.
///
/// All quantities are SI: `density` is BSs per square meter. `power` and
/// `bias` are dimensionless relative values; only the products
/// `power * bias` of different tiers are ever compared, so any common scale
/// factor cancels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TierParams {
    /// BS density λ, per m².
    pub density: f64,
    /// Relative transmit power P.
    pub power: f64,
    /// Pathloss exponent α, must exceed 2 or the coverage integrals diverge.
    pub pathloss_exponent: f64,
    /// Association bias B.
    pub bias: f64,
}

impl TierParams {
    /// Weight entering every association comparison: (P·B)^(1/α). A candidate
    /// at distance d competes with effective distance d / weight.
    pub fn assoc_weight(&self) -> f64 {
        (self.power * self.bias).powf(1.0 / self.pathloss_exponent)
    }
}

/// Reference pathloss constants. These cancel out of every association
/// comparison and every rate; they are carried only so received powers can be
/// reported in absolute terms if a caller wants them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropagationConstants {
    /// Pathloss at the reference distance.
    pub reference_loss: f64,
    /// Reference distance, meters.
    pub reference_distance: f64,
    /// Carrier wavelength, meters. Informational; no computation uses it.
    pub wavelength: f64,
}

impl Default for PropagationConstants {
    fn default() -> Self {
        Self { reference_loss: 1.0, reference_distance: 1.0, wavelength: 0.125 }
    }
}

/// Validated network model: the tier list plus the user population the rates
/// are reported for.
///
/// Construct via [`validate_config`] (or [`NetworkConfig::validated`]); the
/// analytic and simulation crates assume the invariants hold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkConfig {
    pub tiers: Vec<TierParams>,
    pub propagation: PropagationConstants,
    /// UE density f_u, per m².
    pub user_density: f64,
    /// Reporting region area S, m².
    pub region_area: f64,
}

impl NetworkConfig {
    pub fn tier_count(&self) -> usize {
        self.tiers.len()
    }

    pub fn tier(&self, index: usize) -> Result<&TierParams, ConfigError> {
        self.tiers.get(index).ok_or(ConfigError::TierIndex { index, count: self.tiers.len() })
    }

    /// The common pathloss exponent, or an error if tiers disagree.
    pub fn common_exponent(&self) -> Result<f64, ConfigError> {
        let first = self.tiers[0].pathloss_exponent;
        for t in &self.tiers[1..] {
            if t.pathloss_exponent != first {
                return Err(ConfigError::MixedExponents(first, t.pathloss_exponent));
            }
        }
        Ok(first)
    }

    /// Expected number of UEs in the reporting region, f_u · S.
    pub fn users_in_region(&self) -> f64 {
        self.user_density * self.region_area
    }

    pub fn validated(self) -> Result<Self, ConfigError> {
        validate_config(self)
    }
}

fn positive_finite(v: f64) -> bool {
    v.is_finite() && v > 0.0
}

/// Checks every model invariant and returns the config unchanged on success.
///
/// Densities, powers and biases must be positive and finite; pathloss
/// exponents must exceed 2; the user density may be zero (rates are then
/// zero) but not negative.
pub fn validate_config(cfg: NetworkConfig) -> Result<NetworkConfig, ConfigError> {
    if cfg.tiers.is_empty() {
        return Err(ConfigError::EmptyTiers);
    }
    for (i, t) in cfg.tiers.iter().enumerate() {
        if !positive_finite(t.density) {
            return Err(ConfigError::BadDensity { tier: i, value: t.density });
        }
        if !positive_finite(t.power) {
            return Err(ConfigError::BadPower { tier: i, value: t.power });
        }
        if !positive_finite(t.bias) {
            return Err(ConfigError::BadBias { tier: i, value: t.bias });
        }
        if !(t.pathloss_exponent.is_finite() && t.pathloss_exponent > 2.0) {
            return Err(ConfigError::PathlossTooSmall { tier: i, value: t.pathloss_exponent });
        }
    }
    if !(cfg.user_density.is_finite() && cfg.user_density >= 0.0) {
        return Err(ConfigError::BadUserDensity(cfg.user_density));
    }
    if !positive_finite(cfg.region_area) {
        return Err(ConfigError::BadRegionArea(cfg.region_area));
    }
    let p = &cfg.propagation;
    for (name, value) in [
        ("reference_loss", p.reference_loss),
        ("reference_distance", p.reference_distance),
        ("wavelength", p.wavelength),
    ] {
        if !positive_finite(value) {
            return Err(ConfigError::BadPropagation { name, value });
        }
    }
    Ok(cfg)
}

/// Power/bias ratio β_n = (P_n B_n / (P_m B_m))^(1/α) relative to reference
/// tier `m`, defined when all tiers share one pathloss exponent.
pub fn beta_factor(cfg: &NetworkConfig, m: usize, n: usize) -> Result<f64, ConfigError> {
    let alpha = cfg.common_exponent()?;
    let tm = cfg.tier(m)?;
    let tn = cfg.tier(n)?;
    Ok(((tn.power * tn.bias) / (tm.power * tm.bias)).powf(1.0 / alpha))
}
