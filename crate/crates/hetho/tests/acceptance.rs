//! Acceptance gate: one test per shipping criterion, tolerances pinned as
//! consts next to the criteria that use them. Tests print one line per
//! criterion (visible with `--nocapture`); the harness result line carries
//! the same pass/fail verdict either way.
//!
//! Two criteria fail by design and stay red rather than being loosened:
//! criterion 9's claim that the total rate never increases with the tier-2
//! bias has an interior maximum near B₂ = 1.2, and criterion 7's
//! exponential residence law is visibly rejected at scale even though its
//! mean is predicted correctly. The README's known-failing-tests section
//! carries the analysis.
//!
//! Criteria are serialized through a mutex so the pinned runtime budgets
//! measure compute, not contention with sibling tests.

use std::sync::{Mutex, MutexGuard, PoisonError};
use std::time::{Duration, Instant};

use hetho_analytic::{
    equal_alpha_rate_per_speed, pairwise_rate_per_speed, residence_time,
    single_tier_rate_per_speed, total_handover_rate, QuadratureSpec, RateMatrix,
};
use hetho_core::schema::{PropagationFile, SpeedFile, TierFile};
use hetho_core::{ConfigFile, NetworkConfig, SpeedModel, UserDensityModel};
use hetho_oracle::{
    bad_region_area_derivative, bad_region_area_numeric, AreaResolution, ServingGeometry,
};
use hetho_sim::{
    estimate_rate_matrix, ks_critical_value, ks_statistic, replication_totals, run_replications,
    summarize, HandoverStats, SimConfig, WalkingModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Criterion 1: general quadrature against the single-tier closed form.
const SINGLE_TIER_REL: f64 = 1e-6;
const SINGLE_TIER_BUDGET: Duration = Duration::from_secs(1);
/// Criterion 2: general quadrature against the shared-exponent closed form.
const EQUAL_ALPHA_REL: f64 = 1e-9;
const EQUAL_ALPHA_BUDGET: Duration = Duration::from_secs(10);
/// Criterion 3: directional symmetry of the cross-tier rate.
const SYMMETRY_REL: f64 = 1e-6;
const SYMMETRY_BUDGET: Duration = Duration::from_secs(30);
/// Criterion 4: closed-form area derivative against Richardson differences.
const DERIVATIVE_REL: f64 = 0.02;
const DERIVATIVE_BUDGET: Duration = Duration::from_secs(120);
/// Criterion 5: simulated rates against analytic at desk scale.
const CROSS_VALIDATION_REL: f64 = 0.03;
const CROSS_VALIDATION_BUDGET: Duration = Duration::from_secs(600);
/// Criterion 7: residence-time law.
const RESIDENCE_MEAN_REL: f64 = 0.03;
const RESIDENCE_KS_ALPHA: f64 = 0.01;
const RESIDENCE_MIN_SAMPLES: usize = 2000;
/// Criterion 8: exact speed linearity of the analytic rates.
const SPEED_RATIO_TOL: f64 = 1e-12;
/// Criterion 9: slack for monotonicity comparisons of quadrature output.
const MONOTONE_SLACK: f64 = 1e-12;
/// Criterion 10: density rescaling law.
const RESCALING_REL: f64 = 1e-8;

fn serial() -> MutexGuard<'static, ()> {
    static LOCK: Mutex<()> = Mutex::new(());
    LOCK.lock().unwrap_or_else(PoisonError::into_inner)
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn rel_gap(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(f64::MIN_POSITIVE)
}

fn tier(density_per_km2: f64, power: f64, alpha: f64, bias: f64) -> TierFile {
    TierFile { density_per_km2, power, alpha, bias }
}

fn config_file(tiers: Vec<TierFile>, speed: SpeedFile) -> ConfigFile {
    ConfigFile {
        tiers,
        user_density_per_km2: 100.0,
        region_area_km2: 1.0,
        speed,
        speed_per_tier: None,
        user_density_per_tier_per_km2: None,
        propagation: PropagationFile::default(),
    }
}

fn config_from(tiers: Vec<TierFile>, speed: SpeedFile) -> NetworkConfig {
    config_file(tiers, speed).build().unwrap().0
}

fn reference_network() -> (NetworkConfig, SpeedModel, UserDensityModel) {
    ConfigFile::two_tier_reference().build().unwrap()
}

fn pooled_residence(stats: &[HandoverStats], tier: usize) -> Vec<f64> {
    stats.iter().flat_map(|s| s.residence_samples[tier].iter().copied()).collect()
}

#[test]
fn criterion_01_single_tier_rate_matches_the_closed_form() {
    let _guard = serial();
    let start = Instant::now();
    for lambda_per_km2 in [0.5, 1.0, 2.0, 5.0] {
        let (cfg, speed, users) = config_file(
            vec![tier(lambda_per_km2, 1.0, 3.5, 1.0)],
            SpeedFile::Uniform { mean_mps: 5.0 },
        )
        .build()
        .unwrap();
        let general = total_handover_rate(&cfg, &users, &speed, &spec()).unwrap().total;
        let population = users.density_for_tier(0, cfg.user_density) * cfg.region_area;
        let closed = single_tier_rate_per_speed(cfg.tiers[0].density)
            * population
            * speed.law_for_tier(0).mean();
        let gap = rel_gap(general, closed);
        assert!(
            gap <= SINGLE_TIER_REL,
            "criterion 01 FAIL: lambda {lambda_per_km2}/km²: general {general:e} Hz vs closed \
             {closed:e} Hz, relative gap {gap:e} exceeds {SINGLE_TIER_REL:e}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed <= SINGLE_TIER_BUDGET,
        "criterion 01 FAIL: runtime {elapsed:?} exceeds {SINGLE_TIER_BUDGET:?}"
    );
    println!(
        "criterion 01 PASS: single-tier quadrature matches 4·sqrt(lambda)/pi to {SINGLE_TIER_REL:e} \
         at four densities in {elapsed:?}"
    );
}

/// Random tier sets drawn once from a fixed stream, so failures replay.
fn random_tiers(rng: &mut ChaCha12Rng, count: usize, shared_alpha: Option<f64>) -> Vec<TierFile> {
    (0..count)
        .map(|_| {
            let alpha = shared_alpha.unwrap_or_else(|| rng.gen_range(2.55..4.95));
            tier(rng.gen_range(0.2..5.0), rng.gen_range(0.05..5.0), alpha, rng.gen_range(0.5..3.0))
        })
        .collect()
}

#[test]
fn criterion_02_equal_exponent_rates_match_the_closed_form() {
    let _guard = serial();
    let start = Instant::now();
    // The closed form is checked to 1e-9, so ask the quadrature for more.
    let tight = QuadratureSpec {
        relative_tolerance: 1e-11,
        absolute_tolerance: 1e-14,
        ..QuadratureSpec::default()
    };
    let mut rng = ChaCha12Rng::seed_from_u64(0xACCE_0002);
    for case in 0..20 {
        let count = rng.gen_range(2..=3);
        let alpha = rng.gen_range(2.6..4.9);
        let cfg = config_from(
            random_tiers(&mut rng, count, Some(alpha)),
            SpeedFile::Constant { mean_mps: 1.0 },
        );
        for m in 0..count {
            for n in 0..count {
                let general = pairwise_rate_per_speed(&cfg, m, n, &tight).unwrap().value;
                let closed = equal_alpha_rate_per_speed(&cfg, m, n).unwrap();
                let gap = rel_gap(general, closed);
                assert!(
                    gap <= EQUAL_ALPHA_REL,
                    "criterion 02 FAIL: case {case} pair {m}-{n} (alpha {alpha:.3}): general \
                     {general:e} vs closed {closed:e}, relative gap {gap:e} exceeds \
                     {EQUAL_ALPHA_REL:e}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed <= EQUAL_ALPHA_BUDGET,
        "criterion 02 FAIL: runtime {elapsed:?} exceeds {EQUAL_ALPHA_BUDGET:?}"
    );
    println!(
        "criterion 02 PASS: 20 random shared-exponent configs match the closed form to \
         {EQUAL_ALPHA_REL:e} on every ordered pair in {elapsed:?}"
    );
}

#[test]
fn criterion_03_cross_tier_rates_are_symmetric_with_unequal_exponents() {
    let _guard = serial();
    let start = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(0xACCE_0003);
    for case in 0..20 {
        let count = rng.gen_range(2..=3);
        let cfg =
            config_from(random_tiers(&mut rng, count, None), SpeedFile::Constant { mean_mps: 1.0 });
        for m in 0..count {
            for n in (m + 1)..count {
                let forward = pairwise_rate_per_speed(&cfg, m, n, &spec()).unwrap().value;
                let reverse = pairwise_rate_per_speed(&cfg, n, m, &spec()).unwrap().value;
                let gap = rel_gap(forward, reverse);
                assert!(
                    gap <= SYMMETRY_REL,
                    "criterion 03 FAIL: case {case} pair {m}-{n}: forward {forward:e} vs reverse \
                     {reverse:e}, relative gap {gap:e} exceeds {SYMMETRY_REL:e}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed <= SYMMETRY_BUDGET,
        "criterion 03 FAIL: runtime {elapsed:?} exceeds {SYMMETRY_BUDGET:?}"
    );
    println!(
        "criterion 03 PASS: 20 random unequal-exponent configs have direction-symmetric \
         cross-tier rates to {SYMMETRY_REL:e} in {elapsed:?}"
    );
}

#[test]
fn criterion_04_area_derivative_matches_richardson_differences() {
    let _guard = serial();
    let start = Instant::now();
    let (cfg, _, _) = reference_network();
    let res = AreaResolution::default();
    // The closed form is the zero-displacement limit, so the numeric side
    // extrapolates the secant slope A(r)/r to r → 0 from r = R/100 and
    // R/1000; the slope is linear in r to leading order, and a factor-10
    // Richardson step removes that term.
    let slope = |pair: (usize, usize), distance: f64, angle: f64, displacement: f64| {
        let g = ServingGeometry::new(distance, angle, displacement, pair).unwrap();
        bad_region_area_numeric(&g, &cfg, res).unwrap() / displacement
    };
    let pi = std::f64::consts::PI;
    let angles = [0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, pi];
    let mut checked = 0;
    for pair in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for distance in [50.0, 100.0, 300.0] {
            for angle in angles {
                let g = ServingGeometry::new(distance, angle, 1e-3 * distance, pair).unwrap();
                let analytic = bad_region_area_derivative(&g, &cfg);
                let r = 0.01 * distance;
                let richardson = (10.0 * slope(pair, distance, angle, r / 10.0)
                    - slope(pair, distance, angle, r))
                    / 9.0;
                let gap = (analytic - richardson).abs();
                let budget = (DERIVATIVE_REL * analytic.abs()).max(1e-9);
                assert!(
                    gap <= budget,
                    "criterion 04 FAIL: pair {pair:?} R={distance} theta={angle:.4}: \
                     derivative {analytic:.6} vs Richardson {richardson:.6}, gap {gap:.2e} \
                     exceeds {budget:.2e}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 60);
    let elapsed = start.elapsed();
    assert!(
        elapsed <= DERIVATIVE_BUDGET,
        "criterion 04 FAIL: runtime {elapsed:?} exceeds {DERIVATIVE_BUDGET:?}"
    );
    println!(
        "criterion 04 PASS: area derivative matches Richardson extrapolation within {:.0}% \
         on a 60-point geometry grid in {elapsed:?}",
        DERIVATIVE_REL * 100.0
    );
}

#[test]
fn criterion_05_simulation_reproduces_the_reference_analytic_rates() {
    let _guard = serial();
    let start = Instant::now();
    let (cfg, speed, users) = reference_network();
    let analytic = total_handover_rate(&cfg, &users, &speed, &spec()).unwrap();
    // Desk profile: laptop-scale disk and windows, straight-line motion.
    let sim_cfg = SimConfig {
        disk_radius: 5_000.0,
        count_region_area: cfg.region_area,
        duration: 2_000.0,
        replications: 8,
        base_seed: 1,
        walking_model: WalkingModel::StraightLine,
        ..SimConfig::default()
    };
    let (_, stats) = run_replications(&cfg, &speed, &sim_cfg).unwrap();
    let sim = estimate_rate_matrix(&stats, &cfg, &users, sim_cfg.count_region_area).unwrap();
    let ci = sim.ci_halfwidth.as_ref().unwrap();
    for (m, n, name) in [(0, 0, "1-1"), (0, 1, "1-2"), (1, 1, "2-2")] {
        let a = analytic.get(m, n);
        let s = sim.get(m, n);
        let gap = rel_gap(s, a);
        let within_ci = (s - a).abs() <= ci[m][n];
        assert!(
            gap <= CROSS_VALIDATION_REL || within_ci,
            "criterion 05 FAIL: pair {name}: simulated {s:.5} vs analytic {a:.5} \
             (relative gap {gap:.3}, CI halfwidth {:.5})",
            ci[m][n]
        );
        println!(
            "criterion 05 pair {name}: simulated {s:.5} vs analytic {a:.5}, relative gap \
             {gap:.3}, CI halfwidth {:.5}",
            ci[m][n]
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed <= CROSS_VALIDATION_BUDGET,
        "criterion 05 FAIL: runtime {elapsed:?} exceeds {CROSS_VALIDATION_BUDGET:?}"
    );
    println!(
        "criterion 05 PASS: desk-profile simulation matches analytic rates within {:.0}% or \
         CI on pairs 1-1, 1-2, 2-2 in {elapsed:?}",
        CROSS_VALIDATION_REL * 100.0
    );
}

#[test]
fn criterion_06_walking_models_agree_at_the_reference_point() {
    let _guard = serial();
    let (cfg, speed, users) = reference_network();
    let run = |model: WalkingModel| {
        let sim_cfg = SimConfig {
            disk_radius: 2_500.0,
            count_region_area: cfg.region_area,
            duration: 250.0,
            replications: 8,
            base_seed: 6,
            walking_model: model,
            ..SimConfig::default()
        };
        let (_, stats) = run_replications(&cfg, &speed, &sim_cfg).unwrap();
        estimate_rate_matrix(&stats, &cfg, &users, sim_cfg.count_region_area).unwrap()
    };
    let straight = run(WalkingModel::StraightLine);
    let rwp = run(WalkingModel::Rwp);
    let ci_s = straight.ci_halfwidth.as_ref().unwrap();
    let ci_r = rwp.ci_halfwidth.as_ref().unwrap();
    for m in 0..2 {
        for n in 0..2 {
            let (a, b) = (straight.get(m, n), rwp.get(m, n));
            let reach = ci_s[m][n] + ci_r[m][n];
            assert!(
                reach.is_finite(),
                "criterion 06 FAIL: pair {}-{} has no confidence interval",
                m + 1,
                n + 1
            );
            assert!(
                (a - b).abs() <= reach,
                "criterion 06 FAIL: pair {}-{}: straight {a:.4} vs random-direction {b:.4} \
                 with non-overlapping 95% CIs (halfwidths {:.4} and {:.4})",
                m + 1,
                n + 1,
                ci_s[m][n],
                ci_r[m][n]
            );
        }
    }
    println!(
        "criterion 06 PASS: straight-line and random-direction rates overlap at 95% confidence \
         on every ordered pair"
    );
}

#[test]
fn criterion_07_residence_times_are_exponential_with_the_predicted_mean() {
    let _guard = serial();
    // Dense network, long windows: sojourn statistics pool thousands of
    // distinct cells, which is what bounds their accuracy.
    let cfg = config_from(
        vec![tier(9.0, 1.0, 3.5, 1.0), tier(18.0, 0.2, 3.5, 1.0)],
        SpeedFile::Constant { mean_mps: 5.0 },
    );
    let cfg = NetworkConfig { user_density: 1.5e-6, ..cfg };
    let speed = SpeedModel::constant(5.0);
    let sim_cfg = SimConfig {
        disk_radius: 4_000.0,
        count_region_area: 1e6,
        duration: 4_000.0,
        replications: 24,
        base_seed: 23,
        ..SimConfig::default()
    };
    let (_, stats) = run_replications(&cfg, &speed, &sim_cfg).unwrap();
    // Sample counts and means are checked for every tier before any
    // distribution test runs, so the deliberate KS failure below cannot
    // mask a green clause.
    let mut ks = Vec::new();
    for tier in 0..cfg.tier_count() {
        let samples = pooled_residence(&stats, tier);
        assert!(
            samples.len() >= RESIDENCE_MIN_SAMPLES,
            "criterion 07 FAIL: tier {}: only {} completed sojourns, need {}",
            tier + 1,
            samples.len(),
            RESIDENCE_MIN_SAMPLES
        );
        let law = residence_time(&cfg, &speed, tier, &spec()).unwrap();
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let gap = rel_gap(mean, law.mean);
        assert!(
            gap <= RESIDENCE_MEAN_REL,
            "criterion 07 FAIL: tier {}: sample mean {mean:.3} s vs predicted {:.3} s, \
             relative gap {gap:.4} exceeds {RESIDENCE_MEAN_REL}",
            tier + 1,
            law.mean
        );
        println!(
            "criterion 07 tier {}: mean {mean:.2} s vs predicted {:.2} s over {} sojourns",
            tier + 1,
            law.mean,
            samples.len()
        );
        let d = ks_statistic(&samples, |t| law.cdf(t));
        let crit = ks_critical_value(samples.len(), RESIDENCE_KS_ALPHA);
        ks.push((tier, d, crit, samples.len()));
    }
    for (tier, d, crit, count) in ks {
        assert!(
            d <= crit,
            "criterion 07 FAIL: tier {}: KS statistic {d:.4} over {count} sojourns exceeds the \
             {RESIDENCE_KS_ALPHA:.0e}-level critical value {crit:.4}; the mean is right but \
             the sampled law is not exponential (see README, known failing tests)",
            tier + 1
        );
    }
    println!(
        "criterion 07 PASS: residence times exponential with the predicted mean on both tiers"
    );
}

#[test]
fn criterion_08_rates_are_linear_in_speed() {
    let _guard = serial();
    let (cfg, _, users) = reference_network();
    let slow = SpeedModel::constant(5.0);
    let fast = SpeedModel::constant(10.0);
    let analytic_slow = total_handover_rate(&cfg, &users, &slow, &spec()).unwrap();
    let analytic_fast = total_handover_rate(&cfg, &users, &fast, &spec()).unwrap();
    for m in 0..2 {
        for n in 0..2 {
            let ratio = analytic_fast.get(m, n) / analytic_slow.get(m, n);
            assert!(
                (ratio - 2.0).abs() <= SPEED_RATIO_TOL,
                "criterion 08 FAIL: pair {}-{}: analytic rate ratio {ratio} differs from 2 by \
                 more than {SPEED_RATIO_TOL:e}",
                m + 1,
                n + 1
            );
        }
    }

    let run = |speed: &SpeedModel| {
        let sim_cfg = SimConfig {
            disk_radius: 2_000.0,
            count_region_area: cfg.region_area,
            duration: 300.0,
            replications: 8,
            base_seed: 8,
            ..SimConfig::default()
        };
        let (_, stats) = run_replications(&cfg, speed, &sim_cfg).unwrap();
        let totals = replication_totals(&stats, &cfg, &users, sim_cfg.count_region_area);
        let matrix = estimate_rate_matrix(&stats, &cfg, &users, sim_cfg.count_region_area).unwrap();
        (matrix.total, summarize(&totals).ci_halfwidth)
    };
    let (slow_rate, slow_ci) = run(&slow);
    let (fast_rate, fast_ci) = run(&fast);
    let gap = (fast_rate - 2.0 * slow_rate).abs();
    let reach = fast_ci + 2.0 * slow_ci;
    assert!(
        gap <= reach,
        "criterion 08 FAIL: simulated total at doubled speed is {fast_rate:.4} vs expected \
         {:.4}, gap {gap:.4} exceeds the combined CI reach {reach:.4}",
        2.0 * slow_rate
    );
    println!(
        "criterion 08 PASS: analytic rates scale exactly 2x with doubled speed (within \
         {SPEED_RATIO_TOL:e}) and the simulated total ratio {:.3} is within its CI of 2",
        fast_rate / slow_rate
    );
}

#[test]
fn criterion_09_bias_sweep_is_monotone_in_both_claimed_directions() {
    let _guard = serial();
    let base = ConfigFile::two_tier_reference();
    let mut totals = Vec::new();
    let mut tier2_rates = Vec::new();
    let mut biases = Vec::new();
    for step in 0..=10u32 {
        let bias2 = f64::from(10 + step) / 10.0;
        let mut file = base.clone();
        file.tiers[1].bias = bias2;
        let (cfg, speed, users) = file.build().unwrap();
        let matrix = total_handover_rate(&cfg, &users, &speed, &spec()).unwrap();
        biases.push(bias2);
        totals.push(matrix.total);
        tier2_rates.push(matrix.get(1, 1));
    }
    for i in 1..tier2_rates.len() {
        assert!(
            tier2_rates[i] >= tier2_rates[i - 1] - MONOTONE_SLACK,
            "criterion 09 FAIL: tier-2 self rate falls from {:.9} to {:.9} between bias {} \
             and {}",
            tier2_rates[i - 1],
            tier2_rates[i],
            biases[i - 1],
            biases[i]
        );
    }
    for i in 1..totals.len() {
        assert!(
            totals[i] <= totals[i - 1] + MONOTONE_SLACK,
            "criterion 09 FAIL: the total rate is claimed nonincreasing in the tier-2 bias but \
             rises from {:.9} at bias {} to {:.9} at bias {}; the curve has an interior maximum \
             near bias 1.2 (see README, known failing tests)",
            totals[i - 1],
            biases[i - 1],
            totals[i],
            biases[i]
        );
    }
    println!(
        "criterion 09 PASS: over bias 1.0..2.0 the tier-2 self rate never falls and the total \
         rate never rises"
    );
}

#[test]
fn criterion_10_rates_rescale_as_the_square_root_of_density() {
    let _guard = serial();
    // The square-root law is a shared-exponent property: the association
    // map is scale-invariant only when every tier decays alike, so the
    // configs here all use one α (the reference pair plus a three-tier set).
    let three = vec![tier(0.5, 2.0, 3.2, 1.0), tier(2.0, 0.5, 3.2, 1.4), tier(6.0, 0.1, 3.2, 0.8)];
    let reference = ConfigFile::two_tier_reference().tiers;
    for tiers in [reference, three] {
        let count = tiers.len();
        let base = config_from(tiers.clone(), SpeedFile::Constant { mean_mps: 1.0 });
        let base_rates = per_speed_matrix(&base);
        for scale in [0.25, 4.0] {
            let scaled_tiers: Vec<TierFile> = tiers
                .iter()
                .map(|t| TierFile { density_per_km2: t.density_per_km2 * scale, ..t.clone() })
                .collect();
            let scaled = config_from(scaled_tiers, SpeedFile::Constant { mean_mps: 1.0 });
            let scaled_rates = per_speed_matrix(&scaled);
            let factor = scale.sqrt();
            for m in 0..count {
                for n in 0..count {
                    let expected = base_rates.get(m, n) * factor;
                    let gap = rel_gap(scaled_rates.get(m, n), expected);
                    assert!(
                        gap <= RESCALING_REL,
                        "criterion 10 FAIL: pair {}-{} at density scale {scale}: rate {:.12e} \
                         vs expected {:.12e}, relative gap {gap:e} exceeds {RESCALING_REL:e}",
                        m + 1,
                        n + 1,
                        scaled_rates.get(m, n),
                        expected
                    );
                }
            }
        }
    }
    println!(
        "criterion 10 PASS: density rescaling by 0.25x and 4x moves every pairwise rate by \
         exactly sqrt(scale) within {RESCALING_REL:e}"
    );
}

fn per_speed_matrix(cfg: &NetworkConfig) -> RateMatrix {
    let pairwise: Vec<Vec<f64>> = (0..cfg.tier_count())
        .map(|m| {
            (0..cfg.tier_count())
                .map(|n| pairwise_rate_per_speed(cfg, m, n, &spec()).unwrap().value)
                .collect()
        })
        .collect();
    RateMatrix::from_pairwise(pairwise, hetho_analytic::Provenance::Analytic)
}
