//! The three subcommands: `run`, `frames`, `sweep`.
//!
//! Each command computes everything first and only then writes output, so a
//! failing invocation leaves no partial files behind. Tables go to the
//! `--out` path when given (summary stays on stdout), otherwise table and
//! summary both go to stdout.

use std::path::PathBuf;

use clap::Args;

use spooky_core::{
    classify_outcome, run_campaign, vli_threshold, CampaignSummary, Error as CoreError,
    ObserverFrame,
};

use crate::config::{self, sweep_values, OutputFormat, OutputSection, Resolved};
use crate::table::{fmt_sci, Cell, ResultTable};
use crate::CliError;

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Config file; defaults to `paper.cfg`, looked up in the working
    /// directory and then under $SPOOKY_CONFIG_DIR
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Override the seed from the config
    #[arg(long)]
    pub seed: Option<u64>,

    /// Write the table to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Table format, overriding the config's `[output]` section
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct FramesArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Observer velocities along the beam axis, m/s, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub velocities: Vec<f64>,
}

fn load_resolved(common: &CommonArgs) -> Result<Resolved, CliError> {
    let path = config::resolve_config_path(common.config.clone())?;
    let file = config::load(&path)?;
    config::resolve(file, common.seed)
}

/// Degenerate-math failures are runtime errors (exit 3); everything else a
/// campaign can return stems from the configuration (exit 2).
fn classify_core_error(e: CoreError) -> CliError {
    match e {
        CoreError::UndefinedCorrelation | CoreError::DegenerateGeometry => {
            CliError::Runtime(e.to_string())
        }
        other => CliError::Config(other.to_string()),
    }
}

/// Renders and routes the output; returns what should go to stdout.
fn emit(
    table: &ResultTable,
    output: &OutputSection,
    args: &CommonArgs,
    summary: &str,
) -> Result<String, CliError> {
    let format = args.format.unwrap_or(output.format);
    let rendered = table.render(format, output.precision_digits);
    match args.out.clone().or_else(|| output.path.clone()) {
        Some(path) => {
            std::fs::write(&path, rendered).map_err(|e| {
                CliError::Runtime(format!("cannot write `{}`: {e}", path.display()))
            })?;
            Ok(summary.to_owned())
        }
        None => Ok(format!("{rendered}{summary}")),
    }
}

fn campaign_summary_text(s: &CampaignSummary, digits: u8) -> String {
    let f = |x: f64| fmt_sci(x, digits);
    format!(
        "# summary\n\
         n_runs = {}\n\
         c_p = {}\n\
         mean_abs_omega_p_rad_per_s = {}\n\
         mean_theta_deg = {}\n\
         mean_abs_theta_deg = {}\n\
         predicted_omega_p_rad_per_s = {}\n\
         predicted_theta_deg = {}\n\
         beam_power_w = {}\n\
         vli_threshold_m_per_s = {}\n",
        s.n_runs,
        f(s.c_p),
        f(s.mean_abs_omega_p),
        f(s.mean_theta_deg),
        f(s.mean_abs_theta_deg),
        f(s.predicted_omega_p),
        f(s.predicted_theta_deg),
        f(s.beam_power_w),
        f(s.vli_threshold_m_per_s),
    )
}

pub fn cmd_run(args: &CommonArgs) -> Result<String, CliError> {
    let resolved = load_resolved(args)?;
    let result = run_campaign(&resolved.experiment).map_err(classify_core_error)?;

    let mut table = ResultTable::new(
        &resolved.hash,
        resolved.experiment.seed,
        vec![
            "run_index",
            "n_left",
            "n_right",
            "delta_n",
            "omega_p_rad_per_s",
            "theta_deg",
        ],
    );
    for (i, s) in result.samples.iter().enumerate() {
        table.rows.push(vec![
            Cell::UInt(i as u64),
            Cell::UInt(s.n_left),
            Cell::UInt(s.n_right),
            Cell::Int(s.delta_n),
            Cell::Float(s.omega_p),
            Cell::Float(s.theta_deg),
        ]);
    }
    let summary = campaign_summary_text(&result.summary, resolved.file.output.precision_digits);
    emit(&table, &resolved.file.output, args, &summary)
}

pub fn cmd_frames(args: &FramesArgs) -> Result<String, CliError> {
    let resolved = load_resolved(&args.common)?;
    let (e1, e3) = resolved
        .experiment
        .detection_events()
        .map_err(classify_core_error)?;
    let threshold = vli_threshold(&e1, &e3).map_err(classify_core_error)?;

    let mut table = ResultTable::new(
        &resolved.hash,
        resolved.experiment.seed,
        vec![
            "v_m_per_s",
            "t_prime_delta_s",
            "collapsed_before_detector",
            "expected_delta_l_hbar",
            "near_threshold",
        ],
    );
    for &v in &args.velocities {
        let frame = ObserverFrame::new(v)
            .map_err(|e| CliError::Config(format!("invalid velocity entry {v}: {e}")))?;
        let verdict = classify_outcome(&e1, &e3, &frame);
        // within 1% of the flip speed: too close to call experimentally
        let near = (v.abs() - threshold).abs() <= 0.01 * threshold;
        table.rows.push(vec![
            Cell::Float(v),
            Cell::Float(verdict.t_prime_delta),
            Cell::Bool(verdict.collapsed_before_detector),
            Cell::Text(verdict.expected_delta_l.as_str().to_owned()),
            Cell::Bool(near),
        ]);
    }
    let digits = resolved.file.output.precision_digits;
    let summary = format!(
        "# summary\nn_frames = {}\nvli_threshold_m_per_s = {}\n",
        args.velocities.len(),
        fmt_sci(threshold, digits),
    );
    emit(&table, &resolved.file.output, &args.common, &summary)
}

pub fn cmd_sweep(args: &CommonArgs) -> Result<String, CliError> {
    let resolved = load_resolved(args)?;
    let sweep = resolved
        .file
        .sweep
        .clone()
        .ok_or_else(|| CliError::Config("config has no [sweep] block".into()))?;
    let values = sweep_values(&sweep)?;

    let mut table = ResultTable::new(
        &resolved.hash,
        resolved.experiment.seed,
        vec![
            "step",
            "value",
            "c_p",
            "mean_abs_omega_p_rad_per_s",
            "mean_abs_theta_deg",
        ],
    );
    table.extras.push(("sweep_parameter", sweep.parameter.clone()));

    // every step reuses the base seed, so the swept parameter is the only
    // difference between rows
    for (step, &value) in values.iter().enumerate() {
        let mut file = resolved.file.clone();
        config::apply_sweep_value(&mut file, &sweep.parameter, value)?;
        let experiment = config::to_experiment(&file)?;
        let result = run_campaign(&experiment).map_err(classify_core_error)?;
        table.rows.push(vec![
            Cell::UInt(step as u64),
            Cell::Float(value),
            Cell::Float(result.summary.c_p),
            Cell::Float(result.summary.mean_abs_omega_p),
            Cell::Float(result.summary.mean_abs_theta_deg),
        ]);
    }
    let summary = format!(
        "# summary\nsweep_parameter = {}\nsteps = {}\n",
        sweep.parameter,
        values.len(),
    );
    emit(&table, &resolved.file.output, args, &summary)
}
