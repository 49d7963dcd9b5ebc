//! Exact finite-displacement cell geometry, used as an independent oracle
//! for the analytic rate engine.
//!
//! The analytic crate reaches the handover rate through a kernel function
//! and a one-dimensional integral. This crate rebuilds the same quantity
//! from first principles: the exact region of candidate positions that
//! trigger a handover after a finite displacement, its area (numeric and
//! Monte-Carlo), the displacement derivative of that area, and the rate
//! assembled from the derivative. None of it shares the kernel or the
//! Gauss-Kronrod integrator, so agreement between the two routes checks the
//! whole reduction, not one implementation of it.

mod area;
mod derivative;
mod error;
mod geometry;

pub use area::{
    bad_region_area_numeric, boundary_trace, keep_link_probability, monte_carlo_area,
    AreaResolution, McArea,
};
pub use derivative::{
    angular_slices, bad_region_area_derivative, derivative_for_bearing, mean_area_derivative,
    rate_per_meter_via_geometry, AngularSlices,
};
pub use error::OracleError;
pub use geometry::{
    bad_region_indicator, cos_bound, inner_reach, outer_reach, x_offset, ServingGeometry,
};
