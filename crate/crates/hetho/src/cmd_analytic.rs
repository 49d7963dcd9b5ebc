use std::path::PathBuf;

use clap::Args;
use hetho_analytic::{
    pairwise_rate_per_speed, tier_association_probability, total_handover_rate, QuadratureSpec,
};

use crate::common::{csv_sink, dump_config, fmt_f64, load_config};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct AnalyticArgs {
    /// Network config, JSON.
    pub config: PathBuf,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

/// Pairwise rate rows (1-based tier ids) plus a network total row.
///
/// `rate_hz` is the regional rate f_u·S·v̄·(per-meter rate); the per-meter
/// column is the speed-free per-UE factor and `gamma_m` the departure tier's
/// association probability.
pub fn run(args: &AnalyticArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    let spec = QuadratureSpec::default();
    let cfg = &loaded.network;
    let matrix = total_handover_rate(cfg, &loaded.users, &loaded.speed, &spec)?;

    let mut w = csv_sink(args.out.as_deref())?;
    w.write_record(["m", "n", "rate_hz", "rate_per_ue_per_meter", "gamma_m"])?;
    for m in 0..cfg.tiers.len() {
        let gamma = tier_association_probability(cfg, m, &spec)?.value;
        for n in 0..cfg.tiers.len() {
            let per_meter = pairwise_rate_per_speed(cfg, m, n, &spec)?.value;
            w.write_record([
                (m + 1).to_string(),
                (n + 1).to_string(),
                fmt_f64(matrix.get(m, n)),
                fmt_f64(per_meter),
                fmt_f64(gamma),
            ])?;
        }
    }
    w.write_record(["total", "", &fmt_f64(matrix.total), "", ""])?;
    w.flush()?;
    Ok(())
}
