//! Analytic handover and residence rates for N-tier cellular networks.
//!
//! Base stations form independent Poisson point processes per tier; UEs
//! attach to the strongest biased received power and move along straight
//! segments. The crate evaluates the pairwise handover rate between every
//! ordered tier pair by singularity-aware adaptive quadrature, together with
//! closed forms for the shared-pathloss-exponent case, tier association
//! probabilities, and the cell residence-time law.
//!
//! The exact cell-boundary geometry these rates summarize is checked
//! independently in `hetho-oracle`, and `hetho-sim` reproduces the same
//! quantities by Monte-Carlo as ground truth.

mod error;
mod kernel;
mod matrix;
mod quad;
mod rates;

pub use error::AnalyticError;
pub use kernel::handover_kernel;
pub use matrix::{compensated_sum, Provenance, RateMatrix};
pub use quad::{Estimate, QuadratureSpec};
pub use rates::{
    association_distance_pdf, distance_lower_bound, equal_alpha_association_probability,
    equal_alpha_rate_per_speed, pairwise_handover_rate, pairwise_rate_per_speed, residence_time,
    single_tier_rate_per_speed, tier_association_probability, total_handover_rate,
    truncation_radius, void_exponent_sum, ResidenceTime,
};
