//! The displacement derivative of the bad-region area and the handover rate
//! rebuilt from it.
//!
//! Dividing the finite-displacement area by the displacement and letting it
//! shrink to zero gives a closed-form rate density in the serving bearing.
//! Averaging that density over the bearing and weighting by the association
//! distance law reproduces the per-meter handover rate through a route that
//! never touches the kernel function or the Gauss-Kronrod integrator, which
//! is the point: agreement here validates the whole analytic reduction.

use std::f64::consts::PI;

use hetho_analytic::{association_distance_pdf, distance_lower_bound, truncation_radius};
use hetho_core::NetworkConfig;

use crate::area::integrate_simpson;
use crate::error::OracleError;
use crate::geometry::ServingGeometry;

/// d(area)/d(displacement) at zero displacement, in m² per m. Depends only
/// on the serving distance, the serving bearing, and the tier pair; the
/// displacement stored in the geometry is ignored.
pub fn bad_region_area_derivative(g: &ServingGeometry, cfg: &NetworkConfig) -> f64 {
    derivative_for_bearing(cfg, g.serving_distance, g.serving_angle.cos(), g.tier_pair)
}

/// Same quantity parameterized by cos of the bearing. Three regimes in
/// u = τ·(L/R)·cosθ with τ the exponent ratio and L the exclusion radius:
/// the candidate disc stays inside the exclusion disc (u ≥ 1, no area), the
/// growth is a complete ring (u ≤ -1), or only an arc sweeps new ground.
pub fn derivative_for_bearing(
    cfg: &NetworkConfig,
    serving_distance: f64,
    cos_bearing: f64,
    pair: (usize, usize),
) -> f64 {
    let (m, n) = pair;
    let tau = cfg.tiers[m].pathloss_exponent / cfg.tiers[n].pathloss_exponent;
    let l = distance_lower_bound(cfg, m, n, serving_distance);
    let scaled = tau * cos_bearing;
    let u = scaled * l / serving_distance;
    if u >= 1.0 {
        0.0
    } else if u <= -1.0 {
        -2.0 * PI * l * l * scaled / serving_distance
    } else {
        2.0 * l * (1.0 - u * u).sqrt() - 2.0 * (l * l / serving_distance) * scaled * u.acos()
    }
}

/// Bearing decomposition of the derivative at one serving distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSlices {
    /// Bearings in [0, dead_until) contribute nothing.
    pub dead_until: f64,
    /// Bearings in [ring_from, π] grow a complete ring.
    pub ring_from: f64,
    /// Numeric integral of the derivative over [dead_until, ring_from).
    pub arc: f64,
    /// Closed-form integral over the ring band: 2πτ(L²/R)·sin(ring_from).
    pub ring: f64,
}

pub fn angular_slices(
    cfg: &NetworkConfig,
    serving_distance: f64,
    pair: (usize, usize),
) -> Result<AngularSlices, OracleError> {
    let (m, n) = pair;
    let tau = cfg.tiers[m].pathloss_exponent / cfg.tiers[n].pathloss_exponent;
    let l = distance_lower_bound(cfg, m, n, serving_distance);
    let ratio = (serving_distance / (tau * l)).min(1.0);
    let dead_until = ratio.acos();
    let ring_from = (-ratio).acos();
    // the ring band is empty when the exclusion disc reaches past the
    // serving station; sin(acos(-1)) would leave float dust here
    let ring = if ratio < 1.0 {
        2.0 * PI * tau * (l * l / serving_distance) * ring_from.sin()
    } else {
        0.0
    };
    let f = |theta: f64| derivative_for_bearing(cfg, serving_distance, theta.cos(), pair);
    let (arc, achieved, converged) = integrate_simpson(&f, dead_until, ring_from, 1e-11, 48);
    if !converged {
        return Err(OracleError::ResolutionTooCoarse { achieved, requested: 1e-11 * arc.abs() });
    }
    Ok(AngularSlices { dead_until, ring_from, arc, ring })
}

/// Derivative averaged over a uniformly random serving bearing.
pub fn mean_area_derivative(
    cfg: &NetworkConfig,
    serving_distance: f64,
    pair: (usize, usize),
) -> Result<f64, OracleError> {
    let s = angular_slices(cfg, serving_distance, pair)?;
    Ok((s.arc + s.ring) / PI)
}

/// Handovers from tier `serving` into tier `target` per meter traveled:
/// the association distance density times the target density times the mean
/// area derivative, integrated over the serving distance.
pub fn rate_per_meter_via_geometry(
    cfg: &NetworkConfig,
    serving: usize,
    target: usize,
) -> Result<f64, OracleError> {
    let reach = truncation_radius(cfg, serving, 40.0);
    let target_density = cfg.tiers[target].density;
    let f = |r: f64| {
        if r <= 0.0 {
            return 0.0;
        }
        let avg = match mean_area_derivative(cfg, r, (serving, target)) {
            Ok(v) => v,
            Err(_) => f64::NAN,
        };
        association_distance_pdf(cfg, serving, r) * target_density * avg
    };
    let (value, achieved, converged) = integrate_simpson(&f, 0.0, reach, 1e-9, 40);
    if !converged || !value.is_finite() {
        return Err(OracleError::ResolutionTooCoarse { achieved, requested: 1e-9 * value.abs() });
    }
    Ok(value)
}
