//! Numeric and Monte-Carlo evaluation of the bad-region area, plus the
//! keep-link probability built from it.
//!
//! The bad region at candidate radius R is a full circle while the cos bound
//! is below -1 (R up to the inner reach), an arc of width 2·arccos(bound)
//! until the bound exceeds +1 (the outer reach), and empty beyond. The area
//! integrates the arc width radially; the integrator here is an adaptive
//! Simpson rule kept deliberately separate from the Gauss-Kronrod engine in
//! the rates crate, so area values cross-check the rate pipeline instead of
//! sharing its numerics.

use std::f64::consts::PI;

use hetho_core::NetworkConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::OracleError;
use crate::geometry::{cos_bound, inner_reach, outer_reach, x_offset, ServingGeometry};

/// Accuracy request for the radial area integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaResolution {
    pub relative_tolerance: f64,
    /// Maximum bisection depth of the adaptive Simpson rule.
    pub max_depth: u32,
}

impl Default for AreaResolution {
    fn default() -> Self {
        Self { relative_tolerance: 1e-9, max_depth: 48 }
    }
}

/// Exact area of the bad region for a finite displacement, in m².
///
/// Zero displacement gives zero area. The full-circle band contributes in
/// closed form; the arc band is integrated adaptively and a depth-limit miss
/// is reported as [`OracleError::ResolutionTooCoarse`].
pub fn bad_region_area_numeric(
    g: &ServingGeometry,
    cfg: &NetworkConfig,
    res: AreaResolution,
) -> Result<f64, OracleError> {
    let r = g.displacement;
    if r == 0.0 {
        return Ok(0.0);
    }
    let x = x_offset(g, cfg);
    let l = g.exclusion_radius(cfg);
    let hi = outer_reach(r, x);
    if hi <= l {
        return Ok(0.0);
    }
    let lo = inner_reach(r, x);
    let mut area = 0.0;
    if lo > l {
        area += PI * (lo * lo - l * l);
    }
    let arc_from = lo.max(l);
    let width = |radius: f64| {
        let c = cos_bound(radius, r, x).clamp(-1.0, 1.0);
        2.0 * c.acos() * radius
    };
    // rough scale so the relative request becomes an absolute budget
    let rough = coarse_simpson(&width, arc_from, hi, 64);
    let tol = res.relative_tolerance * rough.abs().max(area).max(f64::MIN_POSITIVE);
    let (arc, achieved, converged) = adaptive_simpson(&width, arc_from, hi, tol, res.max_depth);
    if !converged {
        return Err(OracleError::ResolutionTooCoarse { achieved, requested: tol });
    }
    Ok(area + arc)
}

/// Monte-Carlo estimate of the bad-region area with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McArea {
    pub value: f64,
    pub std_error: f64,
}

/// Hit-count oracle for the area: samples candidate positions uniformly over
/// the annulus between the exclusion radius and the outer reach (the region
/// is provably empty elsewhere) and scores the membership indicator. Fully
/// deterministic for a given seed.
pub fn monte_carlo_area(
    g: &ServingGeometry,
    cfg: &NetworkConfig,
    samples: u64,
    seed: u64,
) -> McArea {
    let r = g.displacement;
    if r == 0.0 {
        return McArea { value: 0.0, std_error: 0.0 };
    }
    let x = x_offset(g, cfg);
    let l = g.exclusion_radius(cfg);
    let hi = outer_reach(r, x);
    if hi <= l {
        return McArea { value: 0.0, std_error: 0.0 };
    }
    let annulus = PI * (hi * hi - l * l);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        let radius = (l * l + rng.gen::<f64>() * (hi * hi - l * l)).sqrt();
        let angle = rng.gen_range(-PI..PI);
        let c = cos_bound(radius, r, x);
        if angle.cos() > c {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    McArea { value: p * annulus, std_error: annulus * (p * (1.0 - p) / samples as f64).sqrt() }
}

/// Probability that the displaced UE keeps its serving link: the product
/// over candidate tiers of the void probabilities of their bad regions,
/// exp(-Σ_n λ_n A_mn(r)). Equals 1 at zero displacement.
pub fn keep_link_probability(
    g: &ServingGeometry,
    cfg: &NetworkConfig,
    res: AreaResolution,
) -> Result<f64, OracleError> {
    let mut exponent = 0.0;
    for (n, tier) in cfg.tiers.iter().enumerate() {
        exponent += tier.density * bad_region_area_numeric(&g.with_target(n), cfg, res)?;
    }
    Ok((-exponent).exp())
}

/// Polyline of the handover boundary (where the cos bound equals cos θ_nj),
/// in Cartesian coordinates centered on the UE's starting point, traced as a
/// closed loop. Empty when the bad region is empty.
pub fn boundary_trace(g: &ServingGeometry, cfg: &NetworkConfig, points: usize) -> Vec<[f64; 2]> {
    let r = g.displacement;
    if r == 0.0 || points < 2 {
        return Vec::new();
    }
    let x = x_offset(g, cfg);
    let l = g.exclusion_radius(cfg);
    let hi = outer_reach(r, x);
    if hi <= l {
        return Vec::new();
    }
    let from = inner_reach(r, x).max(l);
    let mut upper = Vec::with_capacity(points * 2);
    for i in 0..points {
        let radius = from + (hi - from) * i as f64 / (points - 1) as f64;
        let theta = cos_bound(radius, r, x).clamp(-1.0, 1.0).acos();
        upper.push([radius * theta.cos(), radius * theta.sin()]);
    }
    let mut trace = upper.clone();
    trace.extend(upper.iter().rev().map(|p| [p[0], -p[1]]));
    trace
}

fn simpson_panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn coarse_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels).map(|i| simpson_panel(f, a + i as f64 * h, a + (i + 1) as f64 * h)).sum()
}

/// Depth-limited adaptive Simpson on [a, b] with an absolute error budget.
/// Returns (value, achieved error estimate, converged).
fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> (f64, f64, bool) {
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> (f64, f64, bool) {
        let m = 0.5 * (a + b);
        let left = simpson_panel(f, a, m);
        let right = simpson_panel(f, m, b);
        let err = (left + right - whole) / 15.0;
        if err.abs() <= tol || b - a <= f64::EPSILON * a.abs().max(b.abs()) {
            return (left + right + err, err.abs(), true);
        }
        if depth == 0 {
            return (left + right + err, err.abs(), false);
        }
        let (lv, le, lc) = recurse(f, a, m, left, 0.5 * tol, depth - 1);
        let (rv, re, rc) = recurse(f, m, b, right, 0.5 * tol, depth - 1);
        (lv + rv, le + re, lc && rc)
    }
    if a >= b {
        return (0.0, 0.0, true);
    }
    recurse(f, a, b, simpson_panel(f, a, b), tol, max_depth)
}

/// Shared entry point for the crate's other integrals: relative tolerance
/// against a coarse estimate, (value, achieved error, converged).
pub(crate) fn integrate_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    max_depth: u32,
) -> (f64, f64, bool) {
    if a >= b {
        return (0.0, 0.0, true);
    }
    let rough = coarse_simpson(f, a, b, 64);
    let tol = rel_tol * rough.abs().max(f64::MIN_POSITIVE);
    adaptive_simpson(f, a, b, tol, max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hetho_core::ConfigFile;

    fn cfg() -> NetworkConfig {
        ConfigFile::two_tier_reference().build().unwrap().0
    }

    fn geom(r: f64, big_r: f64, theta: f64, pair: (usize, usize)) -> ServingGeometry {
        ServingGeometry::new(big_r, theta, r, pair).unwrap()
    }

    fn area(g: &ServingGeometry) -> f64 {
        bad_region_area_numeric(g, &cfg(), AreaResolution::default()).unwrap()
    }

    #[test]
    fn empty_when_serving_station_ahead_and_candidate_tier_reaches_past_it() {
        // candidate exclusion radius 1.58·R, UE moving at 0.5 rad off the
        // serving direction: cosθ exceeds R over the exclusion radius
        let g = geom(0.1, 100.0, 0.5, (1, 0));
        assert_eq!(area(&g), 0.0);
    }

    #[test]
    fn vanishes_linearly_with_displacement() {
        let a1 = area(&geom(1.0, 100.0, std::f64::consts::FRAC_PI_2, (0, 0)));
        let a01 = area(&geom(0.1, 100.0, std::f64::consts::FRAC_PI_2, (0, 0)));
        let a001 = area(&geom(0.01, 100.0, std::f64::consts::FRAC_PI_2, (0, 0)));
        assert!(a1 > a01 && a01 > a001 && a001 > 0.0);
        assert!(a001 < 0.02 * a1);
        assert_eq!(area(&geom(0.0, 100.0, 0.3, (0, 0))), 0.0);
    }

    #[test]
    fn matches_frozen_reference_area() {
        // frozen with independent high-precision arithmetic
        let a = area(&geom(0.5, 100.0, std::f64::consts::PI, (0, 0)));
        assert!((a - 314.944663522377).abs() < 1e-8 * 314.9, "area = {a}");
    }

    #[test]
    fn includes_full_circle_band_when_exclusion_radius_exceeds_serving_distance() {
        // (1,0) moving directly away from the serving station: the band
        // [L, inner reach) is a complete ring
        let g = geom(0.5, 100.0, std::f64::consts::PI, (1, 0));
        let x = x_offset(&g, &cfg());
        let l = g.exclusion_radius(&cfg());
        let lo = inner_reach(0.5, x);
        assert!(lo > l);
        let ring = PI * (lo * lo - l * l);
        assert!(area(&g) > ring);
    }

    #[test]
    fn monte_carlo_oracle_confirms_numeric_area() {
        let cfg = cfg();
        for (g, seed) in [
            (geom(0.5, 100.0, std::f64::consts::PI, (0, 0)), 11),
            (geom(0.5, 100.0, std::f64::consts::PI, (1, 0)), 12),
            (geom(2.0, 100.0, 2.0, (0, 1)), 13),
        ] {
            let numeric = bad_region_area_numeric(&g, &cfg, AreaResolution::default()).unwrap();
            let mc = monte_carlo_area(&g, &cfg, 400_000, seed);
            assert!(
                (mc.value - numeric).abs() <= 3.0 * mc.std_error,
                "numeric {numeric} vs mc {} ± {}",
                mc.value,
                mc.std_error
            );
            assert!((mc.value - numeric).abs() <= 0.01 * numeric);
        }
    }

    #[test]
    fn coarse_resolution_is_reported() {
        let g = geom(0.5, 100.0, std::f64::consts::PI, (0, 0));
        let res = AreaResolution { relative_tolerance: 1e-13, max_depth: 2 };
        assert!(matches!(
            bad_region_area_numeric(&g, &cfg(), res),
            Err(OracleError::ResolutionTooCoarse { .. })
        ));
    }

    #[test]
    fn keep_link_is_one_without_displacement_and_decays_monotonically() {
        let cfg = cfg();
        let p0 = keep_link_probability(&geom(0.0, 100.0, 1.0, (0, 0)), &cfg, Default::default())
            .unwrap();
        assert_eq!(p0, 1.0);
        let mut last = 1.0;
        for r in [0.1, 0.5, 1.0, 2.0, 5.0, 20.0] {
            let p = keep_link_probability(&geom(r, 100.0, 1.0, (0, 0)), &cfg, Default::default())
                .unwrap();
            assert!(p > 0.0 && p <= last, "r={r}: {p} > {last}");
            last = p;
        }
    }

    #[test]
    fn boundary_trace_points_satisfy_the_boundary_equation() {
        let cfg = cfg();
        let g = geom(0.5, 100.0, std::f64::consts::PI, (0, 0));
        let x = x_offset(&g, &cfg);
        let trace = boundary_trace(&g, &cfg, 64);
        assert_eq!(trace.len(), 128);
        for p in &trace {
            let radius = (p[0] * p[0] + p[1] * p[1]).sqrt();
            let c = cos_bound(radius, 0.5, x);
            if c.abs() < 1.0 - 1e-9 {
                assert!((p[0] / radius - c).abs() < 1e-9);
            }
        }
    }
}
