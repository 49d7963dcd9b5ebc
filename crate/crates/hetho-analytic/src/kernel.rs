//! The handover kernel
//!
//! ```text
//!   K(ρ) = ∫₀^min(1,ρ) [ √((1−z²)/(ρ²−z²)) + √((ρ²−z²)/(1−z²)) ] dz
//! ```
//!
//! appears inside every pairwise rate integral with ρ the ratio of the
//! serving distance to the competing tier's lower-bound distance. The
//! integrand blows up like 1/√(b−z) at the upper limit b = min(1, ρ):
//! for ρ < 1 the first radical is singular at z = ρ, for ρ > 1 the second is
//! singular at z = 1. Substituting z = b·sin θ absorbs the singular factor
//! into the measure and leaves a bounded smooth integrand on [0, π/2]:
//!
//! ρ < 1:   K = ∫ ( q + ρ²cos²θ / q ) dθ,   q = √(1 − ρ²sin²θ)
//! ρ ≥ 1:   K = ∫ ( cos²θ / s + s ) dθ,     s = √(ρ² − sin²θ)
//!
//! where q² = (1−ρ²) + ρ²cos²θ and s² = (ρ²−1) + cos²θ are evaluated in
//! those cancellation-free forms. Useful anchors: K(1) = 2, K(ρ) → π/2 as
//! ρ → 0⁺, K(ρ)/ρ → π/2 as ρ → ∞, and the reflection identity
//! K(1/β) = K(β)/β.

use crate::quad::integrate;
use std::f64::consts::FRAC_PI_2;

// The integrand is smooth after substitution; these tolerances keep the
// kernel two orders below the tightest downstream rate tolerance.
const KERNEL_REL_TOL: f64 = 1e-13;
const KERNEL_ABS_TOL: f64 = 1e-16;
const KERNEL_MAX_SUBDIV: usize = 200;

/// Evaluates K(ρ) for ρ > 0.
///
/// Panics if `rho` is not a positive finite number; callers feed it
/// distance ratios which are positive by construction.
pub fn handover_kernel(rho: f64) -> f64 {
    assert!(rho.is_finite() && rho > 0.0, "kernel ratio must be positive and finite, got {rho}");
    let rho2 = rho * rho;
    let out = if rho < 1.0 {
        integrate(
            |theta| {
                let c = theta.cos();
                let q = ((1.0 - rho2) + rho2 * c * c).sqrt();
                q + rho2 * c * c / q
            },
            0.0,
            FRAC_PI_2,
            KERNEL_REL_TOL,
            KERNEL_ABS_TOL,
            KERNEL_MAX_SUBDIV,
        )
    } else {
        integrate(
            |theta| {
                let c = theta.cos();
                let s = ((rho2 - 1.0) + c * c).sqrt();
                c * c / s + s
            },
            0.0,
            FRAC_PI_2,
            KERNEL_REL_TOL,
            KERNEL_ABS_TOL,
            KERNEL_MAX_SUBDIV,
        )
    };
    out.value
}
