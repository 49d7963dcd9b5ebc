use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use hetho_analytic::{residence_time, total_handover_rate, QuadratureSpec, RateMatrix};
use hetho_core::schema::SpeedFile;
use hetho_core::ConfigFile;

use crate::common::{
    csv_sink, dump_config, fmt_f64, load_config, run_sim, LoadedConfig, SimFlags, SimRun,
};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Dataset preset id, 4 through 9.
    pub id: u8,
    /// Network config the preset varies around, JSON.
    pub config: PathBuf,
    /// Directory receiving figure{id}.csv.
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Add simulated columns to the analytic presets (4, 5, 6, 9).
    #[arg(long)]
    pub simulate: bool,
    #[command(flatten)]
    pub flags: SimFlags,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

/// Rate and residence datasets behind the standard plots.
///
/// 4: pairwise rates against mean speed, linear through the origin.
/// 5: total and cross-tier rates against speed for three tier-2 densities.
/// 6: rates against tier-2 density for three tier-2 pathloss exponents.
/// 7: forward and reverse cross-tier rates, simulated with CIs.
/// 8: per-tier residence-time CDF, empirical next to the exponential law.
/// 9: rates against tier-2 bias, eleven points on [1, 2].
///
/// Presets 4-7 and 9 assume a two-tier config; 8 works for any tier count.
pub fn run(args: &FigureArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    if !(4..=9).contains(&args.id) {
        return Err(CliError::usage(format!("figure id must be 4 through 9, got {}", args.id)));
    }
    if args.id != 8 && loaded.network.tiers.len() != 2 {
        return Err(CliError::usage(format!(
            "figure {} assumes a two-tier config, got {} tiers",
            args.id,
            loaded.network.tiers.len()
        )));
    }
    fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", args.out_dir.display())))?;
    let out = args.out_dir.join(format!("figure{}.csv", args.id));
    match args.id {
        4 => speed_series(args, &loaded, &out),
        5 => density_speed_grid(args, &loaded, &out),
        6 => density_alpha_grid(args, &loaded, &out),
        7 => direction_split(args, &loaded, &out),
        8 => residence_cdf(args, &loaded, &out),
        9 => bias_series(args, &loaded, &out),
        _ => unreachable!(),
    }
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn with_mean_speed(file: &ConfigFile, mean: f64) -> Result<ConfigFile, CliError> {
    let mut file = file.clone();
    match &mut file.speed {
        SpeedFile::Constant { mean_mps } | SpeedFile::Uniform { mean_mps } => *mean_mps = mean,
        SpeedFile::Table { .. } => {
            return Err(CliError::usage(
                "speed presets apply to constant or uniform speed laws, not a table",
            ));
        }
    }
    Ok(file)
}

fn with_tier2<F: FnOnce(&mut hetho_core::schema::TierFile)>(
    file: &ConfigFile,
    edit: F,
) -> ConfigFile {
    let mut file = file.clone();
    edit(&mut file.tiers[1]);
    file
}

/// Analytic matrix and, when `--simulate` is set, a simulator run at the
/// same point.
fn point(
    args: &FigureArgs,
    file: ConfigFile,
) -> Result<(LoadedConfig, RateMatrix, Option<SimRun>), CliError> {
    let point = LoadedConfig::from_file(file)?;
    let matrix = total_handover_rate(&point.network, &point.users, &point.speed, &spec())?;
    let sim = if args.simulate {
        Some(run_sim(&point, &args.flags.to_sim_config(&point.network))?)
    } else {
        None
    };
    Ok((point, matrix, sim))
}

fn pair_cells(matrix: &RateMatrix, sim: &Option<SimRun>, pairs: &[(usize, usize)]) -> Vec<String> {
    let mut cells: Vec<String> = pairs.iter().map(|&(m, n)| fmt_f64(matrix.get(m, n))).collect();
    if let Some(run) = sim {
        for &(m, n) in pairs {
            let ci = run.matrix.ci_halfwidth.as_ref().map_or(f64::NAN, |c| c[m][n]);
            cells.push(fmt_f64(run.matrix.get(m, n)));
            cells.push(fmt_f64(ci));
        }
    }
    cells
}

fn sim_headers(base: &mut Vec<String>, simulate: bool, names: &[&str]) {
    if simulate {
        for name in names {
            base.push(format!("sim_{name}_hz"));
            base.push(format!("sim_{name}_ci"));
        }
    }
}

const SPEEDS: [f64; 10] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0];

fn speed_series(args: &FigureArgs, loaded: &LoadedConfig, out: &Path) -> Result<(), CliError> {
    let mut header: Vec<String> =
        ["v_mps", "rate_11_hz", "rate_12_hz", "rate_22_hz"].map(String::from).into();
    sim_headers(&mut header, args.simulate, &["11", "12", "22"]);
    let mut w = csv_sink(Some(out))?;
    w.write_record(&header)?;
    for v in SPEEDS {
        let (_, matrix, sim) = point(args, with_mean_speed(&loaded.file, v)?)?;
        let mut row = vec![fmt_f64(v)];
        row.extend(pair_cells(&matrix, &sim, &[(0, 0), (0, 1), (1, 1)]));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn density_speed_grid(
    args: &FigureArgs,
    loaded: &LoadedConfig,
    out: &Path,
) -> Result<(), CliError> {
    let mut header: Vec<String> =
        ["lambda2_per_km2", "v_mps", "rate_total_hz", "rate_cross_hz"].map(String::from).into();
    sim_headers(&mut header, args.simulate, &["total", "cross"]);
    let mut w = csv_sink(Some(out))?;
    w.write_record(&header)?;
    for lambda2 in [1.0, 2.0, 4.0] {
        for v in SPEEDS {
            let file =
                with_mean_speed(&with_tier2(&loaded.file, |t| t.density_per_km2 = lambda2), v)?;
            let (_, matrix, sim) = point(args, file)?;
            let mut row = vec![fmt_f64(lambda2), fmt_f64(v)];
            row.push(fmt_f64(matrix.total));
            row.push(fmt_f64(matrix.get(0, 1) + matrix.get(1, 0)));
            if let Some(run) = &sim {
                let ci = run.matrix.ci_halfwidth.as_ref();
                row.push(fmt_f64(run.matrix.total));
                row.push(fmt_f64(run.total_summary.ci_halfwidth));
                row.push(fmt_f64(run.matrix.get(0, 1) + run.matrix.get(1, 0)));
                let cross_ci = ci.map_or(f64::NAN, |c| c[0][1] + c[1][0]);
                row.push(fmt_f64(cross_ci));
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn density_alpha_grid(
    args: &FigureArgs,
    loaded: &LoadedConfig,
    out: &Path,
) -> Result<(), CliError> {
    let mut header: Vec<String> =
        ["alpha2", "lambda2_per_km2", "rate_total_hz", "rate_cross_hz"].map(String::from).into();
    sim_headers(&mut header, args.simulate, &["total", "cross"]);
    let mut w = csv_sink(Some(out))?;
    w.write_record(&header)?;
    for alpha2 in [2.5, 3.5, 4.5] {
        for step in 1..=8u32 {
            let lambda2 = f64::from(step) / 2.0;
            let file = with_tier2(&loaded.file, |t| {
                t.alpha = alpha2;
                t.density_per_km2 = lambda2;
            });
            let (_, matrix, sim) = point(args, file)?;
            let mut row = vec![fmt_f64(alpha2), fmt_f64(lambda2)];
            row.push(fmt_f64(matrix.total));
            row.push(fmt_f64(matrix.get(0, 1) + matrix.get(1, 0)));
            if let Some(run) = &sim {
                row.push(fmt_f64(run.matrix.total));
                row.push(fmt_f64(run.total_summary.ci_halfwidth));
                row.push(fmt_f64(run.matrix.get(0, 1) + run.matrix.get(1, 0)));
                let cross_ci =
                    run.matrix.ci_halfwidth.as_ref().map_or(f64::NAN, |c| c[0][1] + c[1][0]);
                row.push(fmt_f64(cross_ci));
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Forward against reverse cross-tier rate. The analytic rates are equal by
/// construction; the simulator measures both directions independently, so
/// their agreement is a symmetry check on the whole pipeline.
fn direction_split(args: &FigureArgs, loaded: &LoadedConfig, out: &Path) -> Result<(), CliError> {
    let mut w = csv_sink(Some(out))?;
    w.write_record([
        "v_mps",
        "analytic_cross_hz",
        "sim_forward_hz",
        "sim_forward_ci",
        "sim_reverse_hz",
        "sim_reverse_ci",
    ])?;
    for v in SPEEDS {
        let point = LoadedConfig::from_file(with_mean_speed(&loaded.file, v)?)?;
        let matrix = total_handover_rate(&point.network, &point.users, &point.speed, &spec())?;
        let run = run_sim(&point, &args.flags.to_sim_config(&point.network))?;
        let ci = run.matrix.ci_halfwidth.as_ref();
        w.write_record([
            fmt_f64(v),
            fmt_f64(matrix.get(0, 1)),
            fmt_f64(run.matrix.get(0, 1)),
            fmt_f64(ci.map_or(f64::NAN, |c| c[0][1])),
            fmt_f64(run.matrix.get(1, 0)),
            fmt_f64(ci.map_or(f64::NAN, |c| c[1][0])),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Empirical residence CDF from pooled sojourns next to the exponential law,
/// per tier, on a grid reaching the law's 99th percentile.
fn residence_cdf(args: &FigureArgs, loaded: &LoadedConfig, out: &Path) -> Result<(), CliError> {
    let run = run_sim(loaded, &args.flags.to_sim_config(&loaded.network))?;
    let tiers = loaded.network.tiers.len();
    let mut w = csv_sink(Some(out))?;
    w.write_record(["tier", "t_s", "empirical_cdf", "analytic_cdf"])?;
    for tier in 0..tiers {
        let mut samples: Vec<f64> =
            run.stats.iter().flat_map(|s| s.residence_samples[tier].iter().copied()).collect();
        samples.sort_unstable_by(f64::total_cmp);
        let law = residence_time(&loaded.network, &loaded.speed, tier, &spec())?;
        let t_max = law.mean * 100f64.ln();
        const STEPS: usize = 120;
        for i in 0..=STEPS {
            let t = t_max * i as f64 / STEPS as f64;
            let below = samples.partition_point(|&s| s <= t);
            let empirical =
                if samples.is_empty() { f64::NAN } else { below as f64 / samples.len() as f64 };
            w.write_record([
                (tier + 1).to_string(),
                fmt_f64(t),
                fmt_f64(empirical),
                fmt_f64(law.cdf(t)),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn bias_series(args: &FigureArgs, loaded: &LoadedConfig, out: &Path) -> Result<(), CliError> {
    let mut header: Vec<String> =
        ["bias2", "rate_11_hz", "rate_12_hz", "rate_21_hz", "rate_22_hz", "rate_total_hz"]
            .map(String::from)
            .into();
    sim_headers(&mut header, args.simulate, &["11", "12", "21", "22"]);
    let mut w = csv_sink(Some(out))?;
    w.write_record(&header)?;
    for step in 0..=10u32 {
        let bias2 = f64::from(10 + step) / 10.0;
        let file = with_tier2(&loaded.file, |t| t.bias = bias2);
        let (_, matrix, sim) = point(args, file)?;
        let mut row = vec![fmt_f64(bias2)];
        row.extend(pair_cells(&matrix, &None, &[(0, 0), (0, 1), (1, 0), (1, 1)]));
        row.push(fmt_f64(matrix.total));
        if let Some(run) = &sim {
            for (m, n) in [(0usize, 0usize), (0, 1), (1, 0), (1, 1)] {
                let ci = run.matrix.ci_halfwidth.as_ref().map_or(f64::NAN, |c| c[m][n]);
                row.push(fmt_f64(run.matrix.get(m, n)));
                row.push(fmt_f64(ci));
            }
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
