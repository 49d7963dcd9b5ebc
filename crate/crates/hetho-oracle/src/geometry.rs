//! Exact bad-region geometry for a displaced UE.
//!
//! The serving station sits at polar position (R, θ) relative to the UE's
//! starting point; the UE moves to (r, 0). A candidate tier-n station at
//! (R_nj, θ_nj) forces a handover exactly when its biased received power at
//! the new position beats the serving station's. Squaring out the power
//! comparison turns that into `cos θ_nj > (R_nj² + x) / (2 r R_nj)` with a
//! single geometry-dependent offset `x`; the set of such candidate positions
//! is the bad region. All lengths in meters, areas in m².

use hetho_analytic::distance_lower_bound;
use hetho_core::NetworkConfig;

use crate::error::OracleError;

/// Serving-link geometry at the moment of a displacement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ServingGeometry {
    /// Distance from the UE's starting point to the serving station (R).
    pub serving_distance: f64,
    /// Angle of the serving station (θ), in (-π, π].
    pub serving_angle: f64,
    /// How far the UE has moved along the positive x axis (r ≥ 0).
    pub displacement: f64,
    /// (serving tier m, candidate tier n).
    pub tier_pair: (usize, usize),
}

impl ServingGeometry {
    pub fn new(
        serving_distance: f64,
        serving_angle: f64,
        displacement: f64,
        tier_pair: (usize, usize),
    ) -> Result<Self, OracleError> {
        let bad = |msg: String| Err(OracleError::BadGeometry(msg));
        if !(serving_distance.is_finite() && serving_distance > 0.0) {
            return bad(format!("serving distance must be positive, got {serving_distance}"));
        }
        if !(serving_angle.is_finite()
            && serving_angle > -std::f64::consts::PI
            && serving_angle <= std::f64::consts::PI)
        {
            return bad(format!("serving angle must lie in (-pi, pi], got {serving_angle}"));
        }
        if !(displacement.is_finite() && displacement >= 0.0) {
            return bad(format!("displacement must be >= 0, got {displacement}"));
        }
        Ok(Self { serving_distance, serving_angle, displacement, tier_pair })
    }

    /// Same displacement event, examined against another candidate tier.
    pub fn with_target(&self, target: usize) -> Self {
        Self { tier_pair: (self.tier_pair.0, target), ..*self }
    }

    /// Exclusion radius of the candidate tier at displacement zero.
    pub fn exclusion_radius(&self, cfg: &NetworkConfig) -> f64 {
        let (m, n) = self.tier_pair;
        distance_lower_bound(cfg, m, n, self.serving_distance)
    }
}

/// The offset `x` of the handover condition, in m².
///
/// x = r² − ((B_n P_n)/(B_m P_m))^(2/α_n) · (R² − 2 r R cosθ + r²)^(α_m/α_n).
/// At r = 0 it equals minus the squared exclusion radius; candidate stations
/// closer than that cannot exist, so the bad region is empty.
pub fn x_offset(g: &ServingGeometry, cfg: &NetworkConfig) -> f64 {
    let (m, n) = g.tier_pair;
    let tm = &cfg.tiers[m];
    let tn = &cfg.tiers[n];
    let r = g.displacement;
    let big_r = g.serving_distance;
    let moved_sq = big_r * big_r - 2.0 * r * big_r * g.serving_angle.cos() + r * r;
    let ratio = (tn.power * tn.bias) / (tm.power * tm.bias);
    r * r
        - ratio.powf(2.0 / tn.pathloss_exponent)
            * moved_sq.powf(tm.pathloss_exponent / tn.pathloss_exponent)
}

/// cos θ_nj bound at candidate radius `radius`: (R_nj² + x) / (2 r R_nj).
/// Candidates with cos θ_nj above it are in the bad region.
pub fn cos_bound(radius: f64, displacement: f64, x: f64) -> f64 {
    (radius * radius + x) / (2.0 * displacement * radius)
}

/// Largest candidate radius the bad region can reach: where the cos bound
/// hits +1, r + √(r² − x).
pub fn outer_reach(displacement: f64, x: f64) -> f64 {
    let disc = displacement * displacement - x;
    if disc <= 0.0 {
        return 0.0;
    }
    displacement + disc.sqrt()
}

/// Candidate radius below which the whole circle is bad (cos bound ≤ -1):
/// -r + √(r² − x).
pub fn inner_reach(displacement: f64, x: f64) -> f64 {
    let disc = displacement * displacement - x;
    if disc <= 0.0 {
        return 0.0;
    }
    -displacement + disc.sqrt()
}

/// Membership test: does a candidate tier-n station at (radius, angle) force
/// a handover once the UE has moved? Requires a strictly positive
/// displacement; the candidate must also clear the exclusion radius.
pub fn bad_region_indicator(
    candidate: (f64, f64),
    g: &ServingGeometry,
    cfg: &NetworkConfig,
) -> bool {
    let (radius, angle) = candidate;
    if radius <= g.exclusion_radius(cfg) {
        return false;
    }
    let x = x_offset(g, cfg);
    angle.cos() > cos_bound(radius, g.displacement, x)
}
