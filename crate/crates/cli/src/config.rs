//! Config file schema, resolution, and hashing.
//!
//! The on-disk format is TOML with unit-suffixed keys (`t_run_s`, `x3_m`,
//! ...). Unknown keys are rejected everywhere. `plate.thickness_m` may be
//! omitted, in which case it resolves to the half-wave floor
//! `design_lambda_m / (2 * delta_n)`.
//!
//! The config hash is the SHA-256 of the canonical serialization of the
//! resolved file (thickness filled in, seed override applied) with the
//! presentation-only `[output]` section normalized away, so it identifies
//! exactly the inputs that determine the numbers.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use spooky_core::{min_thickness, ExperimentConfig, Model, WavePlateSpec};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub source: SourceSection,
    pub amplifier: AmplifierSection,
    pub beam: BeamSection,
    pub plate: PlateSection,
    pub geometry: GeometrySection,
    pub run: RunSection,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceSection {
    /// Pair emission rate, 1/s.
    pub n_gamma_per_s: f64,
    /// Source-on duration per repetition, s.
    pub t_run_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplifierSection {
    pub gain: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamSection {
    pub lambda_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlateSection {
    pub rho_kg_per_m3: f64,
    pub radius_m: f64,
    pub delta_n: f64,
    pub design_lambda_m: f64,
    /// Defaults to the half-wave floor when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thickness_m: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    /// Analyzer position, m (defaults to the origin).
    #[serde(default)]
    pub x1_m: f64,
    /// Plate-detector position, m.
    pub x3_m: f64,
    /// Lab-frame delay between the two detections, s.
    pub collapse_delay_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub model: ModelName,
    pub tau_s: f64,
    #[serde(default)]
    pub sigma_omega_rad_per_s: f64,
    pub seed: u64,
    pub repetitions: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelName {
    NonlocalCollapse,
    NoSignalingNull,
}

impl From<ModelName> for Model {
    fn from(name: ModelName) -> Self {
        match name {
            ModelName::NonlocalCollapse => Model::NonlocalCollapse,
            ModelName::NoSignalingNull => Model::NoSignalingNull,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    pub format: OutputFormat,
    /// Significant digits for floats in tables and summaries, 1..=17.
    pub precision_digits: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            format: OutputFormat::Csv,
            precision_digits: 9,
            path: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    /// JSON Lines: one object per row, header object first.
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    /// Dotted config key, e.g. `plate.radius_m`.
    pub parameter: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<SweepScale>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepScale {
    Linear,
    Log,
}

/// A parsed config with everything derived from it.
#[derive(Debug, Clone)]
pub struct Resolved {
    /// Canonical form: thickness filled in, seed override applied.
    pub file: ConfigFile,
    pub experiment: ExperimentConfig,
    pub hash: String,
}

/// Finds the config file: the given path as-is, else (for relative paths)
/// under `$SPOOKY_CONFIG_DIR`; with no path given, `paper.cfg` through the
/// same lookup.
pub fn resolve_config_path(arg: Option<PathBuf>) -> Result<PathBuf, CliError> {
    let name = arg.unwrap_or_else(|| PathBuf::from("paper.cfg"));
    if name.exists() {
        return Ok(name);
    }
    let mut tried = vec![name.display().to_string()];
    if name.is_relative() {
        if let Ok(dir) = std::env::var("SPOOKY_CONFIG_DIR") {
            let candidate = Path::new(&dir).join(&name);
            if candidate.exists() {
                return Ok(candidate);
            }
            tried.push(candidate.display().to_string());
        }
    }
    Err(CliError::Config(format!(
        "config file not found (tried: {})",
        tried.join(", ")
    )))
}

/// Reads and parses a config file. Parse errors keep toml's line-numbered
/// diagnostics.
pub fn load(path: &Path) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read `{}`: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::Config(format!("invalid config `{}`:\n{e}", path.display())))
}

/// Applies the seed override, fills defaults, validates, and hashes.
pub fn resolve(mut file: ConfigFile, seed_override: Option<u64>) -> Result<Resolved, CliError> {
    if let Some(seed) = seed_override {
        file.run.seed = seed;
    }
    if file.plate.thickness_m.is_none() {
        let floor = min_thickness(file.plate.design_lambda_m, file.plate.delta_n)
            .map_err(|e| CliError::Config(e.to_string()))?;
        file.plate.thickness_m = Some(floor);
    }
    if !(1..=17).contains(&file.output.precision_digits) {
        return Err(CliError::Config(format!(
            "output.precision_digits must be in 1..=17, got {}",
            file.output.precision_digits
        )));
    }
    let experiment = to_experiment(&file)?;
    let hash = config_hash(&file);
    Ok(Resolved {
        file,
        experiment,
        hash,
    })
}

/// Builds the validated engine config from a (resolved) file.
pub fn to_experiment(file: &ConfigFile) -> Result<ExperimentConfig, CliError> {
    let p = &file.plate;
    let thickness = match p.thickness_m {
        Some(t) => t,
        None => min_thickness(p.design_lambda_m, p.delta_n)
            .map_err(|e| CliError::Config(e.to_string()))?,
    };
    let plate = WavePlateSpec::new(
        p.rho_kg_per_m3,
        thickness,
        p.radius_m,
        p.delta_n,
        p.design_lambda_m,
    )
    .map_err(|e| CliError::Config(format!("invalid [plate]: {e}")))?;
    let cfg = ExperimentConfig {
        n_gamma: file.source.n_gamma_per_s,
        gain: file.amplifier.gain,
        t_run: file.source.t_run_s,
        tau: file.run.tau_s,
        lambda: file.beam.lambda_m,
        plate,
        x1: file.geometry.x1_m,
        x3: file.geometry.x3_m,
        collapse_delay: file.geometry.collapse_delay_s,
        model: file.run.model.into(),
        sigma_omega: file.run.sigma_omega_rad_per_s,
        seed: file.run.seed,
        repetitions: file.run.repetitions,
    };
    cfg.validate()
        .map_err(|e| CliError::Config(format!("invalid config: {e}")))?;
    Ok(cfg)
}

/// SHA-256 over the canonical serialization, presentation options excluded.
pub fn config_hash(file: &ConfigFile) -> String {
    let mut for_hash = file.clone();
    for_hash.output = OutputSection::default();
    let text = toml::to_string(&for_hash).expect("resolved config serializes");
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Expands a sweep block into concrete parameter values.
pub fn sweep_values(sweep: &SweepSection) -> Result<Vec<f64>, CliError> {
    match (&sweep.values, sweep.min, sweep.max, sweep.steps) {
        (Some(values), None, None, None) => {
            if values.is_empty() {
                return Err(CliError::Config("sweep.values is empty".into()));
            }
            Ok(values.clone())
        }
        (None, Some(min), Some(max), Some(steps)) => {
            if steps == 0 {
                return Err(CliError::Config("sweep.steps must be at least 1".into()));
            }
            if steps == 1 {
                return Ok(vec![min]);
            }
            let scale = sweep.scale.unwrap_or(SweepScale::Linear);
            let n = f64::from(steps - 1);
            let values = match scale {
                SweepScale::Linear => (0..steps)
                    .map(|i| min + (max - min) * f64::from(i) / n)
                    .collect(),
                SweepScale::Log => {
                    if !(min > 0.0 && max > 0.0) {
                        return Err(CliError::Config(
                            "log-scale sweep needs positive min and max".into(),
                        ));
                    }
                    let (a, b) = (min.ln(), max.ln());
                    (0..steps)
                        .map(|i| (a + (b - a) * f64::from(i) / n).exp())
                        .collect()
                }
            };
            Ok(values)
        }
        _ => Err(CliError::Config(
            "sweep needs either `values` or all of `min`, `max`, `steps`".into(),
        )),
    }
}

pub const SWEEPABLE: &[&str] = &[
    "source.n_gamma_per_s",
    "source.t_run_s",
    "amplifier.gain",
    "beam.lambda_m",
    "plate.rho_kg_per_m3",
    "plate.radius_m",
    "plate.delta_n",
    "plate.design_lambda_m",
    "plate.thickness_m",
    "geometry.x1_m",
    "geometry.x3_m",
    "geometry.collapse_delay_s",
    "run.tau_s",
    "run.sigma_omega_rad_per_s",
];

/// Overwrites one swept parameter in a (resolved) file.
pub fn apply_sweep_value(
    file: &mut ConfigFile,
    parameter: &str,
    value: f64,
) -> Result<(), CliError> {
    match parameter {
        "source.n_gamma_per_s" => file.source.n_gamma_per_s = value,
        "source.t_run_s" => file.source.t_run_s = value,
        "amplifier.gain" => file.amplifier.gain = value,
        "beam.lambda_m" => file.beam.lambda_m = value,
        "plate.rho_kg_per_m3" => file.plate.rho_kg_per_m3 = value,
        "plate.radius_m" => file.plate.radius_m = value,
        "plate.delta_n" => file.plate.delta_n = value,
        "plate.design_lambda_m" => file.plate.design_lambda_m = value,
        "plate.thickness_m" => file.plate.thickness_m = Some(value),
        "geometry.x1_m" => file.geometry.x1_m = value,
        "geometry.x3_m" => file.geometry.x3_m = value,
        "geometry.collapse_delay_s" => file.geometry.collapse_delay_s = value,
        "run.tau_s" => file.run.tau_s = value,
        "run.sigma_omega_rad_per_s" => file.run.sigma_omega_rad_per_s = value,
        _ => {
            return Err(CliError::Config(format!(
                "unknown sweep parameter `{parameter}`; supported: {}",
                SWEEPABLE.join(", ")
            )))
        }
    }
    Ok(())
}
