//! Rate estimation from replication stats.
//!
//! Point estimates pool events and exposure across replications (total
//! counts over total UE-seconds); uncertainty comes from the spread of the
//! per-replication rates, as a normal-approximation 95% interval.

use hetho_analytic::{Provenance, RateMatrix};
use hetho_core::{NetworkConfig, UserDensityModel};

use crate::error::SimError;
use crate::run::HandoverStats;
use crate::stats::summarize;

/// Rate matrix of a single replication, Hz per ordered tier pair.
pub fn replication_rate_matrix(
    stats: &HandoverStats,
    cfg: &NetworkConfig,
    users: &UserDensityModel,
    count_region_area: f64,
) -> Vec<Vec<f64>> {
    let n = cfg.tier_count();
    let mut rates = vec![vec![0.0; n]; n];
    if stats.ue_seconds_in_region <= 0.0 {
        return rates;
    }
    for m in 0..n {
        let population = users.density_for_tier(m, cfg.user_density) * count_region_area;
        for target in 0..n {
            rates[m][target] =
                stats.counts[m][target] as f64 / stats.ue_seconds_in_region * population;
        }
    }
    rates
}

/// Pool replications into a simulated [`RateMatrix`]. The per-UE event rate
/// (counts per UE-second in the region) scales by the UE population f_u·S
/// of the departure tier. CI halfwidths need at least two replications and
/// are NaN for pairs that never fired, which marks them unreliable.
pub fn estimate_rate_matrix(
    stats: &[HandoverStats],
    cfg: &NetworkConfig,
    users: &UserDensityModel,
    count_region_area: f64,
) -> Result<RateMatrix, SimError> {
    let n = cfg.tier_count();
    if stats.is_empty() {
        return Err(SimError::Estimation("no replications to aggregate".into()));
    }
    if stats.iter().any(|s| s.config_hash != stats[0].config_hash) {
        return Err(SimError::Estimation("stats come from different configurations".into()));
    }
    if stats.iter().any(|s| s.counts.len() != n || s.counts.iter().any(|row| row.len() != n)) {
        return Err(SimError::Estimation("stats shape does not match the tier count".into()));
    }
    let exposure: f64 = stats.iter().map(|s| s.ue_seconds_in_region).sum();
    if exposure <= 0.0 {
        return Err(SimError::Estimation("no UE time observed inside the counting region".into()));
    }

    let mut pooled = vec![vec![0u64; n]; n];
    for s in stats {
        for m in 0..n {
            for t in 0..n {
                pooled[m][t] += s.counts[m][t];
            }
        }
    }
    let mut pairwise = vec![vec![0.0; n]; n];
    for m in 0..n {
        let population = users.density_for_tier(m, cfg.user_density) * count_region_area;
        for t in 0..n {
            pairwise[m][t] = pooled[m][t] as f64 / exposure * population;
        }
    }
    let mut matrix = RateMatrix::from_pairwise(pairwise, Provenance::Simulated);

    if stats.len() >= 2 {
        let per_rep: Vec<Vec<Vec<f64>>> = stats
            .iter()
            .map(|s| replication_rate_matrix(s, cfg, users, count_region_area))
            .collect();
        let mut ci = vec![vec![0.0; n]; n];
        for m in 0..n {
            for t in 0..n {
                if pooled[m][t] == 0 {
                    ci[m][t] = f64::NAN;
                } else {
                    let series: Vec<f64> = per_rep.iter().map(|r| r[m][t]).collect();
                    ci[m][t] = summarize(&series).ci_halfwidth;
                }
            }
        }
        matrix.ci_halfwidth = Some(ci);
    }
    Ok(matrix)
}

/// Total-rate series across replications, for paired comparisons.
pub fn replication_totals(
    stats: &[HandoverStats],
    cfg: &NetworkConfig,
    users: &UserDensityModel,
    count_region_area: f64,
) -> Vec<f64> {
    stats
        .iter()
        .map(|s| {
            replication_rate_matrix(s, cfg, users, count_region_area).iter().flatten().sum::<f64>()
        })
        .collect()
}
