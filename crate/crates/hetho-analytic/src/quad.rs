//! Adaptive Gauss-Kronrod quadrature.
//!
//! A 21-point Kronrod rule with embedded 10-point Gauss error estimate,
//! refined by worst-interval bisection. This is the integration engine for
//! the outer coverage integrals and for the handover kernel after its
//! singularity-removing substitution; both integrands are finite everywhere,
//! so plain bisection converges without extrapolation machinery.

use serde::{Deserialize, Serialize};

/// Tolerances and truncation controls for the rate integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    /// The improper coverage integrals are cut where the exponent of the
    /// void probability reaches this value; tail mass is exp(-value).
    pub outer_truncation_exponent: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-9,
            absolute_tolerance: 1e-12,
            outer_truncation_exponent: 40.0,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance.is_finite()) {
            return Err(format!("relative tolerance must be > 0, got {}", self.relative_tolerance));
        }
        if !(self.absolute_tolerance > 0.0 && self.absolute_tolerance.is_finite()) {
            return Err(format!("absolute tolerance must be > 0, got {}", self.absolute_tolerance));
        }
        if !(self.outer_truncation_exponent > 0.0 && self.outer_truncation_exponent.is_finite()) {
            return Err(format!(
                "truncation exponent must be > 0, got {}",
                self.outer_truncation_exponent
            ));
        }
        if self.max_subdivisions == 0 {
            return Err("max subdivisions must be at least 1".into());
        }
        Ok(())
    }
}

/// Integral value together with the estimated absolute error actually
/// achieved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct AdaptiveOutcome {
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
    #[allow(dead_code)]
    pub subdivisions: usize,
}

// 21-point Kronrod abscissae (positive half) with the embedded 10-point
// Gauss rule on the even-indexed points. Standard QUADPACK constants.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut err = err.abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let min_err = 50.0 * f64::EPSILON * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && min_err > err {
        err = min_err;
    }
    err
}

/// One K21 panel on [a, b]: (value, error estimate).
fn qk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut result_gauss = 0.0;
    let mut result_kronrod = f_center * WGK[10];
    let mut resabs = result_kronrod.abs();
    let mut fv = [0.0f64; 21];
    fv[10] = f_center;

    for (j, &x) in XGK.iter().enumerate().take(10) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[20 - j] = f2;
        let sum = f1 + f2;
        result_kronrod += WGK[j] * sum;
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * sum;
        }
    }

    let mean = 0.5 * result_kronrod;
    let mut resasc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[20 - j] - mean).abs());
    }

    let err = (result_kronrod - result_gauss) * half;
    (result_kronrod * half, rescale_error(err, resabs * half.abs(), resasc * half.abs()))
}

/// Adaptive integral of `f` over [a, b] by worst-interval bisection.
///
/// Never panics on hard integrands: the outcome carries the best value, the
/// achieved error estimate and whether the tolerance was met within the
/// subdivision budget. Callers decide whether non-convergence is fatal.
pub(crate) fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_subdivisions: usize,
) -> AdaptiveOutcome {
    if a == b {
        return AdaptiveOutcome { value: 0.0, abs_error: 0.0, converged: true, subdivisions: 0 };
    }

    struct Interval {
        a: f64,
        b: f64,
        value: f64,
        error: f64,
    }

    let (value, error) = qk21(&mut f, a, b);
    let mut intervals = vec![Interval { a, b, value, error }];

    for split in 0..max_subdivisions {
        let total: f64 = intervals.iter().map(|i| i.value).sum();
        let total_err: f64 = intervals.iter().map(|i| i.error).sum();
        if total_err <= abs_tol.max(rel_tol * total.abs()) {
            return AdaptiveOutcome {
                value: total,
                abs_error: total_err,
                converged: true,
                subdivisions: split,
            };
        }

        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .unwrap();
        let Interval { a: wa, b: wb, .. } = intervals[worst];
        let mid = 0.5 * (wa + wb);
        if mid <= wa || mid >= wb {
            // interval underflow, cannot refine further
            break;
        }
        let (lv, le) = qk21(&mut f, wa, mid);
        let (rv, re) = qk21(&mut f, mid, wb);
        intervals[worst] = Interval { a: wa, b: mid, value: lv, error: le };
        intervals.push(Interval { a: mid, b: wb, value: rv, error: re });
    }

    let total: f64 = intervals.iter().map(|i| i.value).sum();
    let total_err: f64 = intervals.iter().map(|i| i.error).sum();
    AdaptiveOutcome {
        value: total,
        abs_error: total_err,
        converged: total_err <= abs_tol.max(rel_tol * total.abs()),
        subdivisions: intervals.len() - 1,
    }
}
