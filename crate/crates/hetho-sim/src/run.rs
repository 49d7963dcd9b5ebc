//! Replication driver: realize a deployment, move the population, count
//! tier-to-tier handovers and cell residence intervals.

use std::f64::consts::TAU;

use hetho_core::{NetworkConfig, SpeedModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SimError;
use crate::field::{sample_ppp, BsField, Selector, TierStations};
use crate::motion::{
    place_uniform_in_disk, sample_speed, step_ue, UeState, WalkingModel, MAX_HEADING_HOLD,
};

/// Motion boundary as a fraction of the station disk. Stations in the outer
/// ring provide coverage beyond every reachable position, so the counted
/// region never sees a coverage edge.
pub const REFLECT_FRACTION: f64 = 0.9;

const DOMAIN_FIELD: u64 = 0;
const DOMAIN_UE_INIT: u64 = 1;
const DOMAIN_UE_MOTION: u64 = 2;

/// Independent ChaCha substream. The base seed fixes the key; the
/// (replication, domain, index) triple picks the stream, so every sampled
/// value is determined by (base_seed, replication) alone and parallel runs
/// match serial runs bit for bit. Fields and UE initial states repeat
/// across runs that differ only in walking model, speed law, or step size,
/// which pairs the noise in model-to-model comparisons.
fn stream_rng(base_seed: u64, replication: u64, domain: u64, index: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(base_seed);
    rng.set_stream((replication << 32) | (domain << 24) | index);
    rng
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SimConfig {
    /// Station disk radius, m.
    pub disk_radius: f64,
    /// Area S of the counting disk at the origin, m².
    pub count_region_area: f64,
    /// Simulated time per replication, s.
    pub duration: f64,
    /// Step length, s. Default: displacement per step capped at 1% of the
    /// mean station spacing, 0.01/(2·v̄·√λ_total).
    pub time_step: Option<f64>,
    pub walking_model: WalkingModel,
    pub replications: usize,
    pub base_seed: u64,
    /// Residence intervals are kept only when the serving station lies this
    /// far inside the motion boundary, so boundary-bent paths do not
    /// distort the sojourn law.
    pub residence_margin: f64,
    /// Resample the speed at each heading change (random-direction model).
    pub redraw_speed_on_turn: bool,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            disk_radius: 10_000.0,
            count_region_area: 1e6,
            duration: 1e4,
            time_step: None,
            walking_model: WalkingModel::StraightLine,
            replications: 8,
            base_seed: 1,
            residence_margin: 1000.0,
            redraw_speed_on_turn: true,
        }
    }
}

/// Resolved, validated run geometry. The step count is rounded so the
/// duration is an exact multiple of the effective step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimPlan {
    pub time_step: f64,
    pub steps: u64,
    pub ue_count: u64,
    pub reflect_radius: f64,
    pub count_radius: f64,
    pub residence_radius: f64,
    pub config_hash: u64,
}

pub fn plan(cfg: &NetworkConfig, speed: &SpeedModel, sim: &SimConfig) -> Result<SimPlan, SimError> {
    let bad = |msg: String| Err(SimError::BadSetup(msg));
    if !(sim.disk_radius.is_finite() && sim.disk_radius > 0.0) {
        return bad(format!("disk radius must be positive, got {}", sim.disk_radius));
    }
    if !(sim.duration.is_finite() && sim.duration > 0.0) {
        return bad(format!("duration must be positive, got {}", sim.duration));
    }
    if sim.replications == 0 || sim.replications as u64 >= u32::MAX as u64 {
        return bad(format!("replication count {} out of range", sim.replications));
    }
    if !(sim.residence_margin.is_finite() && sim.residence_margin >= 0.0) {
        return bad(format!("residence margin must be >= 0, got {}", sim.residence_margin));
    }
    if speed.per_tier.is_some() {
        return bad("per-tier speed laws apply to analytic assembly only; the simulator moves \
                    one population under the default law"
            .into());
    }
    let reflect_radius = REFLECT_FRACTION * sim.disk_radius;
    if !(sim.count_region_area > 0.0) {
        return bad(format!("count region area must be positive, got {}", sim.count_region_area));
    }
    let count_radius = (sim.count_region_area / std::f64::consts::PI).sqrt();
    if count_radius > reflect_radius {
        return bad(format!(
            "count region radius {count_radius:.1} m exceeds the motion boundary \
             {reflect_radius:.1} m"
        ));
    }
    let mean_speed = speed.default.mean();
    let total_density: f64 = cfg.tiers.iter().map(|t| t.density).sum();
    let default_step = if mean_speed > 0.0 && total_density > 0.0 {
        0.01 / (2.0 * mean_speed * total_density.sqrt())
    } else {
        sim.duration
    };
    let requested = match sim.time_step {
        Some(dt) if !(dt.is_finite() && dt > 0.0) => {
            return bad(format!("time step must be positive, got {dt}"));
        }
        Some(dt) => dt,
        None => default_step,
    };
    let steps = (sim.duration / requested).round().max(1.0);
    if steps >= 2f64.powi(53) {
        return bad(format!("time step {requested} yields too many steps"));
    }
    let steps = steps as u64;
    let time_step = sim.duration / steps as f64;
    let ue_count =
        (cfg.user_density * std::f64::consts::PI * reflect_radius * reflect_radius).round();
    if !(ue_count >= 0.0) || ue_count >= (1u64 << 24) as f64 {
        return bad(format!("population of {ue_count} UEs out of range"));
    }
    Ok(SimPlan {
        time_step,
        steps,
        ue_count: ue_count as u64,
        reflect_radius,
        count_radius,
        residence_radius: (reflect_radius - sim.residence_margin).max(0.0),
        config_hash: config_hash(cfg, speed, sim),
    })
}

/// FNV-1a over the canonical JSON of everything that shapes a run; stamps
/// each stats record so mixed-config aggregation is detectable.
fn config_hash(cfg: &NetworkConfig, speed: &SpeedModel, sim: &SimConfig) -> u64 {
    let blob = serde_json::to_string(&(cfg, speed, sim)).expect("config serializes");
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in blob.as_bytes() {
        hash ^= *byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// One replication's raw observations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HandoverStats {
    pub replication: usize,
    pub seed: u64,
    pub config_hash: u64,
    /// counts[m][n]: handovers leaving tier m for tier n inside the region.
    pub counts: Vec<Vec<u64>>,
    pub ue_seconds_in_region: f64,
    /// Completed sojourn durations per serving tier, seconds.
    pub residence_samples: Vec<Vec<f64>>,
}

struct Tracked {
    state: UeState,
    interval_start_step: u64,
    /// The placement interval has no opening handover and is discarded.
    opened_by_handover: bool,
    motion_rng: ChaCha12Rng,
}

pub fn run_replication(
    cfg: &NetworkConfig,
    speed: &SpeedModel,
    sim: &SimConfig,
    plan: &SimPlan,
    replication: usize,
) -> HandoverStats {
    let n = cfg.tier_count();
    let rep = replication as u64;
    let tiers = (0..n)
        .map(|t| {
            let mut rng = stream_rng(sim.base_seed, rep, DOMAIN_FIELD, t as u64);
            TierStations::index(
                sample_ppp(cfg.tiers[t].density, sim.disk_radius, &mut rng),
                sim.disk_radius,
            )
        })
        .collect();
    let field = BsField::new(tiers, Selector::for_config(cfg));

    let law = &speed.default;
    let mut ues = Vec::with_capacity(plan.ue_count as usize);
    for u in 0..plan.ue_count {
        let mut init = stream_rng(sim.base_seed, rep, DOMAIN_UE_INIT, u);
        let position = place_uniform_in_disk(plan.reflect_radius, &mut init);
        let heading = init.gen_range(0.0..TAU);
        let speed_draw = sample_speed(law, &mut init);
        // drawn for both walking models to keep the stream aligned
        let hold = MAX_HEADING_HOLD * init.gen::<f64>();
        let mut state = UeState::new(position, speed_draw, heading, hold);
        state.serving = field.strongest(position[0], position[1]);
        ues.push(Tracked {
            state,
            interval_start_step: 0,
            opened_by_handover: false,
            motion_rng: stream_rng(sim.base_seed, rep, DOMAIN_UE_MOTION, u),
        });
    }

    let mut counts = vec![vec![0u64; n]; n];
    let mut residence: Vec<Vec<f64>> = vec![Vec::new(); n];
    let mut in_region_steps: u64 = 0;
    let count_r2 = plan.count_radius * plan.count_radius;
    let residence_r2 = plan.residence_radius * plan.residence_radius;
    let dt = plan.time_step;

    for step in 1..=plan.steps {
        for ue in &mut ues {
            step_ue(
                &mut ue.state,
                sim.walking_model,
                sim.redraw_speed_on_turn,
                law,
                dt,
                plan.reflect_radius,
                &mut ue.motion_rng,
            );
            let [x, y] = ue.state.position;
            let in_region = x * x + y * y <= count_r2;
            in_region_steps += in_region as u64;
            let now = field.strongest(x, y);
            if now != ue.state.serving {
                if let (Some((old_tier, old_idx)), Some((new_tier, _))) = (ue.state.serving, now) {
                    if in_region {
                        counts[old_tier as usize][new_tier as usize] += 1;
                    }
                    if ue.opened_by_handover {
                        let bs = field.station_position(old_tier, old_idx);
                        if bs[0] * bs[0] + bs[1] * bs[1] <= residence_r2 {
                            residence[old_tier as usize]
                                .push((step - ue.interval_start_step) as f64 * dt);
                        }
                    }
                    ue.opened_by_handover = true;
                    ue.interval_start_step = step;
                }
                ue.state.serving = now;
            }
        }
    }

    HandoverStats {
        replication,
        seed: sim.base_seed,
        config_hash: plan.config_hash,
        counts,
        ue_seconds_in_region: in_region_steps as f64 * dt,
        residence_samples: residence,
    }
}

/// All replications, in parallel, deterministically ordered by index.
pub fn run_replications(
    cfg: &NetworkConfig,
    speed: &SpeedModel,
    sim: &SimConfig,
) -> Result<(SimPlan, Vec<HandoverStats>), SimError> {
    let plan = plan(cfg, speed, sim)?;
    let stats = (0..sim.replications)
        .into_par_iter()
        .map(|rep| run_replication(cfg, speed, sim, &plan, rep))
        .collect();
    Ok((plan, stats))
}
