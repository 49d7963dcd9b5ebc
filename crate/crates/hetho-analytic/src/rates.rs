//! Handover and residence rates for the N-tier network model.
//!
//! A UE attaches to the base station with the strongest biased received
//! power. When the serving tier is m, a tier-n station at distance d beats a
//! tier-m station at distance r exactly when d is below a power-law bound in
//! r, so conditioning on the serving distance turns every tier into an
//! exclusion disk. The handover rate from tier m to tier n per meter of UE
//! travel is an integral over the serving distance of the expected boundary
//! crossing density, with the geometry captured by
//! [`handover_kernel`](crate::kernel::handover_kernel) and the exclusion
//! disks by the void-probability exponent.
//!
//! Rates returned by the `*_per_speed` functions are per UE per meter
//! traveled; [`pairwise_handover_rate`] and [`total_handover_rate`] scale by
//! the UE population of the reporting region and the mean speed. All inputs
//! and outputs are SI.

use std::f64::consts::PI;

use hetho_core::{beta_factor, NetworkConfig, SpeedModel, UserDensityModel};

use crate::error::AnalyticError;
use crate::kernel::handover_kernel;
use crate::matrix::{Provenance, RateMatrix};
use crate::quad::{integrate, AdaptiveOutcome, Estimate, QuadratureSpec};

/// Closest a tier-`other` station can be when the serving station is the
/// tier-`serving` one at distance `r`.
///
/// For the serving tier itself the bound is `r` exactly. Hot path: tier
/// indices must be in range, out-of-range panics.
pub fn distance_lower_bound(cfg: &NetworkConfig, serving: usize, other: usize, r: f64) -> f64 {
    if serving == other {
        return r;
    }
    let tm = &cfg.tiers[serving];
    let tn = &cfg.tiers[other];
    let ratio = (tn.power * tn.bias) / (tm.power * tm.bias);
    ratio.powf(1.0 / tn.pathloss_exponent) * r.powf(tm.pathloss_exponent / tn.pathloss_exponent)
}

/// Σ_i λ_i · lb_i(r)², the void-probability exponent for serving distance
/// `r` without the factor π.
pub fn void_exponent_sum(cfg: &NetworkConfig, serving: usize, r: f64) -> f64 {
    let mut sum = 0.0;
    for (i, t) in cfg.tiers.iter().enumerate() {
        let lb = distance_lower_bound(cfg, serving, i, r);
        sum += t.density * lb * lb;
    }
    sum
}

/// Serving distance beyond which the association density is below
/// exp(-`exponent`) of its scale, used to truncate the rate integrals.
///
/// Solves π · Σ_i λ_i lb_i(R)² = `exponent` by bisection; the left side is
/// strictly increasing from 0, so the root is unique.
pub fn truncation_radius(cfg: &NetworkConfig, serving: usize, exponent: f64) -> f64 {
    let shortfall = |r: f64| PI * void_exponent_sum(cfg, serving, r) - exponent;
    let mut hi = 1.0;
    let mut doublings = 0;
    while shortfall(hi) < 0.0 {
        hi *= 2.0;
        doublings += 1;
        // 2^2000 overflows long before this for any validated config
        if doublings > 2000 {
            return hi;
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if shortfall(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Density of the distance to the serving station, conditioned on nothing:
/// f(r) = 2π λ_m r · exp(-π Σ_i λ_i lb_i(r)²). Integrates to the tier-m
/// association probability, not to 1.
pub fn association_distance_pdf(cfg: &NetworkConfig, serving: usize, r: f64) -> f64 {
    if r < 0.0 {
        return 0.0;
    }
    let lam = cfg.tiers[serving].density;
    2.0 * PI * lam * r * (-PI * void_exponent_sum(cfg, serving, r)).exp()
}

/// Probability that a typical UE is served by `serving`, by quadrature of
/// the association-distance density. Works for mixed pathloss exponents.
pub fn tier_association_probability(
    cfg: &NetworkConfig,
    serving: usize,
    spec: &QuadratureSpec,
) -> Result<Estimate, AnalyticError> {
    cfg.tier(serving)?;
    check_spec(spec)?;
    let upper = truncation_radius(cfg, serving, spec.outer_truncation_exponent);
    let out = integrate(
        |r| association_distance_pdf(cfg, serving, r),
        0.0,
        upper,
        spec.relative_tolerance,
        spec.absolute_tolerance,
        spec.max_subdivisions,
    );
    finish("tier association probability", out, spec)
}

/// Closed-form association probability λ_m / Σ_i λ_i β_i² for a shared
/// pathloss exponent.
pub fn equal_alpha_association_probability(
    cfg: &NetworkConfig,
    serving: usize,
) -> Result<f64, AnalyticError> {
    let lam = cfg.tier(serving)?.density;
    Ok(lam / weighted_density_sum(cfg, serving)?)
}

/// Handovers from tier `serving` into tier `target` per UE per meter
/// traveled, by adaptive quadrature over the serving distance.
///
/// This is the general path: it accepts per-tier pathloss exponents. The
/// integrand at serving distance R is
/// 8 λ_n λ_m τ · L² · K(R / (τ L)) · exp(-π Σ_i λ_i lb_i(R)²), with
/// L = lb_n(R) and τ = α_m / α_n, truncated where the exponential underflows
/// the requested tolerance.
pub fn pairwise_rate_per_speed(
    cfg: &NetworkConfig,
    serving: usize,
    target: usize,
    spec: &QuadratureSpec,
) -> Result<Estimate, AnalyticError> {
    let tm = cfg.tier(serving)?;
    let tn = cfg.tier(target)?;
    check_spec(spec)?;
    let tau = tm.pathloss_exponent / tn.pathloss_exponent;
    let prefactor = 8.0 * tm.density * tn.density * tau;
    // With a shared exponent the bound is L = w·R, so the kernel argument
    // R/(τL) = 1/w is one constant; hoist it out of the integrand.
    let fixed_kernel = if tm.pathloss_exponent == tn.pathloss_exponent {
        Some(handover_kernel(1.0 / distance_lower_bound(cfg, serving, target, 1.0)))
    } else {
        None
    };
    let upper = truncation_radius(cfg, serving, spec.outer_truncation_exponent);
    let integrand = |r: f64| {
        if r <= 0.0 {
            return 0.0;
        }
        let l = distance_lower_bound(cfg, serving, target, r);
        if l <= 0.0 {
            return 0.0;
        }
        let kernel = match fixed_kernel {
            Some(k) => k,
            None => handover_kernel(r / (tau * l)),
        };
        prefactor * l * l * kernel * (-PI * void_exponent_sum(cfg, serving, r)).exp()
    };
    let out = integrate(
        integrand,
        0.0,
        upper,
        spec.relative_tolerance,
        spec.absolute_tolerance,
        spec.max_subdivisions,
    );
    finish("pairwise handover rate", out, spec)
}

/// Closed-form per-meter handover rate for a shared pathloss exponent:
/// 2 λ_n λ_m β_n K(β_n) / (π (Σ_i λ_i β_i²)^(3/2)), with β_i relative to the
/// serving tier.
pub fn equal_alpha_rate_per_speed(
    cfg: &NetworkConfig,
    serving: usize,
    target: usize,
) -> Result<f64, AnalyticError> {
    let lam_m = cfg.tier(serving)?.density;
    let lam_n = cfg.tier(target)?.density;
    let beta_n = beta_factor(cfg, serving, target)?;
    let denom = weighted_density_sum(cfg, serving)?;
    Ok(2.0 * lam_m * lam_n * beta_n * handover_kernel(beta_n) / (PI * denom.powf(1.5)))
}

/// Per-meter handover rate of a single-tier network, 4√λ / π.
pub fn single_tier_rate_per_speed(density: f64) -> f64 {
    4.0 * density.sqrt() / PI
}

/// Handovers per second from tier `serving` into tier `target` summed over
/// the UEs of the reporting region: population · mean speed · per-meter rate.
pub fn pairwise_handover_rate(
    cfg: &NetworkConfig,
    users: &UserDensityModel,
    speed: &SpeedModel,
    serving: usize,
    target: usize,
    spec: &QuadratureSpec,
) -> Result<f64, AnalyticError> {
    let per_meter = pairwise_rate_per_speed(cfg, serving, target, spec)?.value;
    let population = users.density_for_tier(serving, cfg.user_density) * cfg.region_area;
    Ok(population * speed.mean_for_tier(serving) * per_meter)
}

/// Full pairwise rate matrix plus total, in handovers per second.
pub fn total_handover_rate(
    cfg: &NetworkConfig,
    users: &UserDensityModel,
    speed: &SpeedModel,
    spec: &QuadratureSpec,
) -> Result<RateMatrix, AnalyticError> {
    let n = cfg.tier_count();
    let mut pairwise = vec![vec![0.0; n]; n];
    for (m, row) in pairwise.iter_mut().enumerate() {
        for (t, cell) in row.iter_mut().enumerate() {
            *cell = pairwise_handover_rate(cfg, users, speed, m, t, spec)?;
        }
    }
    Ok(RateMatrix::from_pairwise(pairwise, Provenance::Analytic))
}

/// Exponential residence-time law for cells of one tier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidenceTime {
    /// Mean sojourn in seconds; infinite for motionless UEs.
    pub mean: f64,
}

impl ResidenceTime {
    pub fn pdf(&self, t: f64) -> f64 {
        if !(t >= 0.0) || !self.mean.is_finite() {
            return 0.0;
        }
        (-t / self.mean).exp() / self.mean
    }

    pub fn cdf(&self, t: f64) -> f64 {
        if t <= 0.0 || !self.mean.is_finite() {
            return 0.0;
        }
        -(-t / self.mean).exp_m1()
    }
}

/// Residence-time law for tier `serving` cells: the mean is the tier
/// association probability over the per-second rate of leaving a tier-m cell
/// for any tier. A zero mean speed yields an infinite mean, which is the
/// correct degenerate law rather than an error.
pub fn residence_time(
    cfg: &NetworkConfig,
    speed: &SpeedModel,
    serving: usize,
    spec: &QuadratureSpec,
) -> Result<ResidenceTime, AnalyticError> {
    let gamma = tier_association_probability(cfg, serving, spec)?.value;
    let mut per_meter = 0.0;
    for target in 0..cfg.tier_count() {
        per_meter += pairwise_rate_per_speed(cfg, serving, target, spec)?.value;
    }
    let v = speed.mean_for_tier(serving);
    Ok(ResidenceTime { mean: gamma / (v * per_meter) })
}

/// Σ_i λ_i β_i² with β relative to the serving tier, the denominator shared
/// by the closed forms.
fn weighted_density_sum(cfg: &NetworkConfig, serving: usize) -> Result<f64, AnalyticError> {
    let mut sum = 0.0;
    for (i, t) in cfg.tiers.iter().enumerate() {
        let b = beta_factor(cfg, serving, i)?;
        sum += t.density * b * b;
    }
    Ok(sum)
}

fn check_spec(spec: &QuadratureSpec) -> Result<(), AnalyticError> {
    spec.validate().map_err(AnalyticError::BadSpec)
}

fn finish(
    context: &'static str,
    out: AdaptiveOutcome,
    spec: &QuadratureSpec,
) -> Result<Estimate, AnalyticError> {
    if !out.converged {
        return Err(AnalyticError::NonConvergence {
            context,
            achieved: out.abs_error,
            requested: spec.absolute_tolerance.max(spec.relative_tolerance * out.value.abs()),
        });
    }
    Ok(Estimate { value: out.value, abs_error: out.abs_error })
}
