//! Monte-Carlo mobility simulator: the ground-truth side of the engine.
//!
//! Deployments are PPP draws on a disk, users move under memoryless walking
//! models and associate with the strongest biased received power, and
//! handovers are counted inside a central region. Nothing here shares logic
//! with the analytic crate beyond the shared configuration types, so rate
//! agreement between the two is evidence, not tautology.
//!
//! Determinism contract: every sampled value is a pure function of
//! (base_seed, replication index); replications run in parallel and
//! aggregate in index order, so parallel and serial runs coincide bitwise.

mod error;
mod estimate;
mod field;
mod motion;
mod run;
mod stats;

pub use error::SimError;
pub use estimate::{estimate_rate_matrix, replication_rate_matrix, replication_totals};
pub use field::{sample_ppp, strongest_bs, BsField, Selector, TierStations};
pub use motion::{
    place_uniform_in_disk, sample_speed, step_ue, UeState, WalkingModel, MAX_HEADING_HOLD,
};
pub use run::{
    plan, run_replication, run_replications, HandoverStats, SimConfig, SimPlan, REFLECT_FRACTION,
};
pub use stats::{ks_critical_value, ks_statistic, summarize, SampleSummary};
