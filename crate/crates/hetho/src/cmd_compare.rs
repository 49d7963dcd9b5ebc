use std::path::PathBuf;

use clap::Args;
use hetho_analytic::{total_handover_rate, QuadratureSpec};

use crate::common::{csv_sink, dump_config, fmt_f64, load_config, run_sim, SimFlags};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Network config, JSON.
    pub config: PathBuf,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative disagreement allowed per tier pair.
    #[arg(long, default_value_t = 0.03)]
    pub tolerance: f64,
    #[command(flatten)]
    pub flags: SimFlags,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

/// Both engines on one config, gated pair by pair. A pair passes when the
/// relative gap is within tolerance or the simulated confidence interval
/// covers the analytic value; the CI arm keeps honest noise from failing a
/// short run while a biased estimate with a tight interval still trips. Any
/// pairwise violation exits 1 after the full table is written.
pub fn run(args: &CompareArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    if !(args.tolerance.is_finite() && args.tolerance >= 0.0) {
        return Err(CliError::usage(format!(
            "tolerance must be a nonnegative finite number, got {}",
            args.tolerance
        )));
    }
    let spec = QuadratureSpec::default();
    let analytic = total_handover_rate(&loaded.network, &loaded.users, &loaded.speed, &spec)?;
    let sim_cfg = args.flags.to_sim_config(&loaded.network);
    let sim = run_sim(&loaded, &sim_cfg)?;

    let tiers = loaded.network.tiers.len();
    let ci = sim.matrix.ci_halfwidth.as_ref();
    let mut violations = Vec::new();
    let mut w = csv_sink(args.out.as_deref())?;
    w.write_record([
        "m",
        "n",
        "analytic_hz",
        "simulated_hz",
        "ci_halfwidth",
        "relative_error",
        "within_tolerance",
    ])?;
    for m in 0..tiers {
        for n in 0..tiers {
            let a = analytic.get(m, n);
            let s = sim.matrix.get(m, n);
            let half = ci.map_or(f64::NAN, |c| c[m][n]);
            let (rel, ok) = verdict(a, s, half, args.tolerance);
            if !ok {
                violations.push(format!("{}-{}", m + 1, n + 1));
            }
            w.write_record([
                (m + 1).to_string(),
                (n + 1).to_string(),
                fmt_f64(a),
                fmt_f64(s),
                fmt_f64(half),
                fmt_f64(rel),
                ok.to_string(),
            ])?;
        }
    }
    let (rel, ok) =
        verdict(analytic.total, sim.matrix.total, sim.total_summary.ci_halfwidth, args.tolerance);
    w.write_record([
        "total".to_string(),
        String::new(),
        fmt_f64(analytic.total),
        fmt_f64(sim.matrix.total),
        fmt_f64(sim.total_summary.ci_halfwidth),
        fmt_f64(rel),
        ok.to_string(),
    ])?;
    w.flush()?;

    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::tolerance(format!(
            "{} of {} tier pairs disagree beyond {} with the analytic value outside the 95% CI: {}",
            violations.len(),
            tiers * tiers,
            args.tolerance,
            violations.join(", ")
        )))
    }
}

/// Relative gap and the pass verdict. Exact agreement passes even at zero
/// analytic rate; a NaN halfwidth (no events observed) offers no CI cover.
fn verdict(analytic: f64, simulated: f64, ci_halfwidth: f64, tolerance: f64) -> (f64, bool) {
    let gap = (simulated - analytic).abs();
    let rel = if gap == 0.0 { 0.0 } else { gap / analytic.abs() };
    let ok = rel <= tolerance || gap <= ci_halfwidth;
    (rel, ok)
}
