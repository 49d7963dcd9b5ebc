use std::path::PathBuf;

use clap::Args;
use hetho_oracle::{
    bad_region_area_derivative, bad_region_area_numeric, boundary_trace, keep_link_probability,
    AreaResolution, ServingGeometry,
};

use crate::common::{csv_sink, dump_config, load_config};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Network config, JSON.
    pub config: PathBuf,
    /// Serving tier, 1-based.
    #[arg(long)]
    pub serving_tier: usize,
    /// Candidate target tier, 1-based.
    #[arg(long)]
    pub target_tier: usize,
    /// Distance from the UE to its serving station, meters.
    #[arg(long)]
    pub distance: f64,
    /// UE displacement along its straight step, meters.
    #[arg(long)]
    pub displacement: f64,
    /// Angle between the step direction and the serving station, radians.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub angle: f64,
    /// Also write the handover-boundary polyline as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long, default_value_t = 256)]
    pub trace_points: usize,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

/// Exact-geometry probe for one serving/target pair: the area swept past the
/// handover boundary, its displacement derivative, and the probability the
/// step keeps the serving link. These are the quantities the analytic rates
/// integrate over, exposed for debugging single configurations.
pub fn run(args: &OracleArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    let cfg = &loaded.network;
    let tiers = cfg.tiers.len();
    for (name, value) in [("serving tier", args.serving_tier), ("target tier", args.target_tier)] {
        if value < 1 || value > tiers {
            return Err(CliError::usage(format!(
                "{name} {value} out of range for a {tiers}-tier config (tiers are 1-based)"
            )));
        }
    }
    let g = ServingGeometry::new(
        args.distance,
        args.angle,
        args.displacement,
        (args.serving_tier - 1, args.target_tier - 1),
    )?;
    let res = AreaResolution::default();
    let area = bad_region_area_numeric(&g, cfg, res)?;
    let derivative = bad_region_area_derivative(&g, cfg);
    let keep = keep_link_probability(&g, cfg, res)?;

    if let Some(path) = &args.trace {
        let mut w = csv_sink(Some(path))?;
        w.write_record(["x_m", "y_m"])?;
        for [x, y] in boundary_trace(&g, cfg, args.trace_points) {
            w.write_record([format!("{x}"), format!("{y}")])?;
        }
        w.flush()?;
    }

    let summary = serde_json::json!({
        "serving_tier": args.serving_tier,
        "target_tier": args.target_tier,
        "distance_m": args.distance,
        "displacement_m": args.displacement,
        "angle_rad": args.angle,
        "bad_region_area_m2": area,
        "area_derivative_m": derivative,
        "keep_link_probability": keep,
    });
    println!("{summary}");
    Ok(())
}
