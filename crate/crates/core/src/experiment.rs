//! Monte Carlo engine for the full measurement campaign.
//!
//! One repetition: the pair source runs for `t_run` seconds emitting
//! `n_gamma` pairs per second, the analyzer projects every near photon onto
//! the circular basis, the far beam is power-amplified by `gain` and fed
//! through the plate detector, and the plates then rotate freely for `tau`
//! seconds. The run record keeps the signed left-right count imbalance and
//! the detector readout; the campaign-level witness is the uncentered
//! cosine similarity between the readout and imbalance series.
//!
//! Two detector models compete:
//!
//! - [`Model::NonlocalCollapse`]: every far photon is already in a definite
//!   circular state when it reaches the plates, so the readout tracks the
//!   analyzer imbalance, `omega_p = 4 hbar G delta_n / I_m`, plus optional
//!   instrument noise. With an exactly linear readout the witness is 1.
//! - [`Model::NoSignalingNull`]: the far photon reaches the plates with no
//!   determinate handedness and deposits nothing; the readout is instrument
//!   noise alone and the witness concentrates around 0.
//!
//! The instrument-noise floor `sigma_omega` is an addition to the ideal
//! model: without it the null model's readout series is identically zero
//! and the witness is 0/0, surfaced as [`Error::UndefinedCorrelation`].
//! The default is 0 for the ideal scenario.
//!
//! Amplification is taken literally as `gain` clones of the input photon's
//! state; amplifier spontaneous emission is not modeled. Detector plates
//! re-zero between repetitions (the source is off while they rotate, so
//! each repetition is a fresh measurement cycle).

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::constants::{PLANCK, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::mechdetect::{self, WavePlateSpec};
use crate::relativity::{vli_threshold, DetectorSite, SpacetimeEvent};
use crate::sampling::{stream_rng, BinomialHalf, ImbalanceSampler};

/// Largest pair count exactly representable in an f64 (2^53); beyond this
/// `round(t_run * n_gamma)` silently loses integers.
const MAX_EXACT_PAIRS: f64 = 9_007_199_254_740_992.0;

/// Which physical model drives the detector readout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Far photons collapse to definite circular states before detection.
    NonlocalCollapse,
    /// Far photons stay undetermined; the detector reads pure noise.
    NoSignalingNull,
}

/// Everything a campaign needs; plain data, validated by [`Self::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Pair emission rate, 1/s.
    pub n_gamma: f64,
    /// Amplifier power gain (dimensionless, >= 1 in practice).
    pub gain: f64,
    /// Source-on duration per repetition, s.
    pub t_run: f64,
    /// Free-rotation duration per repetition, s.
    pub tau: f64,
    /// Beam wavelength, m.
    pub lambda: f64,
    pub plate: WavePlateSpec,
    /// Analyzer position on the beam axis, m.
    pub x1: f64,
    /// Plate-detector position on the beam axis, m.
    pub x3: f64,
    /// Lab-frame delay |t3 - t1| between the two detections, s. A modeling
    /// input (set by how fast collapse is taken to propagate), never
    /// hard-coded.
    pub collapse_delay: f64,
    pub model: Model,
    /// Instrument noise floor on the readout, rad/s; 0 for the ideal case.
    pub sigma_omega: f64,
    pub seed: u64,
    pub repetitions: u32,
}

impl Default for ExperimentConfig {
    /// The reference parameter set (also shipped as `paper.cfg`): 1e12
    /// pairs/s for 0.1 ms, gain 1e6, 1 um beam, a 50 um half-wave plate of
    /// density 3000 kg/m^3, detectors 30 km apart with a 1 ps delay, 300 s
    /// of free rotation.
    fn default() -> Self {
        Self {
            n_gamma: 1e12,
            gain: 1e6,
            t_run: 1e-4,
            tau: 300.0,
            lambda: 1e-6,
            plate: WavePlateSpec::half_wave(3000.0, 50e-6, 0.0909, 1e-6)
                .expect("reference plate is valid"),
            x1: 0.0,
            x3: 3e4,
            collapse_delay: 1e-12,
            model: Model::NonlocalCollapse,
            sigma_omega: 0.0,
            seed: 42,
            repetitions: 1000,
        }
    }
}

impl ExperimentConfig {
    /// Checks every scalar invariant. The plate validates itself at
    /// construction.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("n_gamma", self.n_gamma),
            ("gain", self.gain),
            ("t_run", self.t_run),
            ("tau", self.tau),
            ("lambda", self.lambda),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::NonPositive { name, value });
            }
        }
        for (name, value) in [("x1", self.x1), ("x3", self.x3)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        for (name, value) in [
            ("sigma_omega", self.sigma_omega),
            ("collapse_delay", self.collapse_delay),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::Negative { name, value });
            }
        }
        if self.repetitions < 1 {
            return Err(Error::NoRepetitions);
        }
        self.pair_count()?;
        Ok(())
    }

    /// Pairs emitted per repetition, `round(t_run * n_gamma)`.
    pub fn pair_count(&self) -> Result<u64> {
        let pairs = self.t_run * self.n_gamma;
        if !pairs.is_finite() || pairs.round() > MAX_EXACT_PAIRS {
            return Err(Error::PairCountOverflow { pairs });
        }
        Ok(pairs.round() as u64)
    }

    /// The two detection events implied by the geometry, analyzer first.
    pub fn detection_events(&self) -> Result<(SpacetimeEvent, SpacetimeEvent)> {
        Ok((
            SpacetimeEvent::new(self.x1, 0.0, DetectorSite::Alice)?,
            SpacetimeEvent::new(self.x3, self.collapse_delay, DetectorSite::Charlie)?,
        ))
    }
}

/// Outcome of one repetition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSample {
    /// Left-handed outcomes at the analyzer.
    pub n_left: u64,
    /// Right-handed outcomes at the analyzer.
    pub n_right: u64,
    /// Signed imbalance `n_left - n_right`.
    pub delta_n: i64,
    /// Detector readout, rad/s.
    pub omega_p: f64,
    /// Accumulated relative rotation angle, degrees.
    pub theta_deg: f64,
}

/// The campaign witness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationResult {
    /// Uncentered cosine similarity in [-1, 1].
    pub c_p: f64,
    pub n_runs: usize,
}

/// Campaign-level summary alongside the per-run table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CampaignSummary {
    pub n_runs: usize,
    pub c_p: f64,
    /// Monte Carlo mean of |omega_p|, rad/s.
    pub mean_abs_omega_p: f64,
    /// Monte Carlo mean of theta (signed), degrees.
    pub mean_theta_deg: f64,
    /// Monte Carlo mean of |theta|, degrees.
    pub mean_abs_theta_deg: f64,
    /// Readout at the typical imbalance sqrt(t_run n_gamma), rad/s.
    pub predicted_omega_p: f64,
    /// Rotation angle at the typical imbalance over tau, degrees.
    pub predicted_theta_deg: f64,
    /// Optical power entering the detector, W.
    pub beam_power_w: f64,
    /// Boost speed at which the detection order reverses, m/s.
    pub vli_threshold_m_per_s: f64,
}

/// A full campaign: per-run samples, the witness, and the summary.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignResult {
    pub samples: Vec<RunSample>,
    pub correlation: CorrelationResult,
    pub summary: CampaignSummary,
}

/// Typical magnitude of the left-right imbalance, sqrt(t_run * n_gamma).
pub fn expected_fluctuation(t_run: f64, n_gamma: f64) -> f64 {
    debug_assert!(t_run > 0.0 && n_gamma > 0.0);
    (t_run * n_gamma).sqrt()
}

/// Optical power of the amplified beam, `gain * n_gamma * h c / lambda`, W.
pub fn beam_power(gain: f64, n_gamma: f64, lambda: f64) -> f64 {
    debug_assert!(gain > 0.0 && n_gamma > 0.0 && lambda > 0.0);
    gain * n_gamma * PLANCK * SPEED_OF_LIGHT / lambda
}

/// One repetition with the default pair-statistics sampler.
pub fn sample_run(cfg: &ExperimentConfig, run_index: u64) -> Result<RunSample> {
    sample_run_with(cfg, run_index, &BinomialHalf)
}

/// One repetition; `run_index` selects the dedicated RNG stream.
///
/// The draw order within a stream is fixed: first the left count, then (only
/// when `sigma_omega > 0`) one standard normal for the noise. With zero
/// noise the readout equals `mechdetect::omega_p(gain, delta_n, i_m)`
/// bit-for-bit under the collapse model and exactly 0 under the null model.
pub fn sample_run_with<S: ImbalanceSampler + ?Sized>(
    cfg: &ExperimentConfig,
    run_index: u64,
    sampler: &S,
) -> Result<RunSample> {
    cfg.validate()?;
    let pairs = cfg.pair_count()?;
    let i_m = cfg.plate.moment_of_inertia();
    let mut rng = stream_rng(cfg.seed, run_index);
    let n_left = sampler.sample_left(pairs, &mut rng);
    let n_right = pairs - n_left;
    let delta_n = n_left as i64 - n_right as i64;
    let noise = if cfg.sigma_omega > 0.0 {
        let z: f64 = rng.sample(StandardNormal);
        cfg.sigma_omega * z
    } else {
        0.0
    };
    let omega_p = match cfg.model {
        Model::NonlocalCollapse => mechdetect::omega_p(cfg.gain, delta_n as f64, i_m) + noise,
        Model::NoSignalingNull => noise,
    };
    Ok(RunSample {
        n_left,
        n_right,
        delta_n,
        omega_p,
        theta_deg: mechdetect::rotation_angle(omega_p, cfg.tau),
    })
}

/// Uncentered cosine similarity between the readout and imbalance series:
/// `sum(w_i d_i) / (sqrt(sum w_i^2) sqrt(sum d_i^2))`.
///
/// This is deliberately not the Pearson coefficient; both series have zero
/// mean by construction, so the two nearly coincide, but the uncentered
/// form is the one implemented. Sums run in index order so the result does
/// not depend on how the samples were produced.
pub fn correlation(omega_series: &[f64], delta_n_series: &[f64]) -> Result<CorrelationResult> {
    if omega_series.len() != delta_n_series.len() {
        return Err(Error::LengthMismatch {
            left: omega_series.len(),
            right: delta_n_series.len(),
        });
    }
    if omega_series.is_empty() {
        return Err(Error::EmptySeries);
    }
    let mut sum_wd = 0.0;
    let mut sum_w2 = 0.0;
    let mut sum_d2 = 0.0;
    for (w, d) in omega_series.iter().zip(delta_n_series.iter()) {
        sum_wd += w * d;
        sum_w2 += w * w;
        sum_d2 += d * d;
    }
    if sum_w2 == 0.0 || sum_d2 == 0.0 {
        return Err(Error::UndefinedCorrelation);
    }
    Ok(CorrelationResult {
        c_p: sum_wd / (sum_w2.sqrt() * sum_d2.sqrt()),
        n_runs: omega_series.len(),
    })
}

/// Runs the whole campaign with the default sampler.
pub fn run_campaign(cfg: &ExperimentConfig) -> Result<CampaignResult> {
    run_campaign_with(cfg, &BinomialHalf)
}

/// Runs `cfg.repetitions` independent repetitions, in parallel.
///
/// Repetition i draws from stream i, and the indexed parallel collect keeps
/// run order, so the output is bit-identical to a sequential loop no matter
/// how rayon schedules the work. All reductions run in index order.
pub fn run_campaign_with<S: ImbalanceSampler>(
    cfg: &ExperimentConfig,
    sampler: &S,
) -> Result<CampaignResult> {
    cfg.validate()?;
    let samples: Vec<RunSample> = (0..u64::from(cfg.repetitions))
        .into_par_iter()
        .map(|i| sample_run_with(cfg, i, sampler))
        .collect::<Result<Vec<_>>>()?;

    let omegas: Vec<f64> = samples.iter().map(|s| s.omega_p).collect();
    let deltas: Vec<f64> = samples.iter().map(|s| s.delta_n as f64).collect();
    let correlation = correlation(&omegas, &deltas)?;

    let (e1, e3) = cfg.detection_events()?;
    let i_m = cfg.plate.moment_of_inertia();
    let n = samples.len() as f64;
    let predicted_omega_p = mechdetect::omega_p(
        cfg.gain,
        expected_fluctuation(cfg.t_run, cfg.n_gamma),
        i_m,
    );
    let summary = CampaignSummary {
        n_runs: samples.len(),
        c_p: correlation.c_p,
        mean_abs_omega_p: samples.iter().map(|s| s.omega_p.abs()).sum::<f64>() / n,
        mean_theta_deg: samples.iter().map(|s| s.theta_deg).sum::<f64>() / n,
        mean_abs_theta_deg: samples.iter().map(|s| s.theta_deg.abs()).sum::<f64>() / n,
        predicted_omega_p,
        predicted_theta_deg: mechdetect::rotation_angle(predicted_omega_p, cfg.tau),
        beam_power_w: beam_power(cfg.gain, cfg.n_gamma, cfg.lambda),
        vli_threshold_m_per_s: vli_threshold(&e1, &e3)?,
    };
    Ok(CampaignResult {
        samples,
        correlation,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn quick_cfg(model: Model, sigma_omega: f64, repetitions: u32) -> ExperimentConfig {
        ExperimentConfig {
            model,
            sigma_omega,
            repetitions,
            ..ExperimentConfig::default()
        }
    }

    #[test]
    fn expected_fluctuation_examples() {
        assert_eq!(expected_fluctuation(1e-4, 1e12), 1e4);
        assert_relative_eq!(
            expected_fluctuation(4e-4, 1e12),
            2.0 * expected_fluctuation(1e-4, 1e12),
            max_relative = 1e-12
        );
        assert_eq!(expected_fluctuation(1.0, 1.0), 1.0);
    }

    #[test]
    fn beam_power_examples() {
        // oracle: 1e6 * 1e12 * h * c / 1e-6
        let oracle = 1e6 * 1e12 * PLANCK * SPEED_OF_LIGHT / 1e-6;
        let p = beam_power(1e6, 1e12, 1e-6);
        assert_relative_eq!(p, oracle, max_relative = 1e-15);
        assert_relative_eq!(p, 0.1986, max_relative = 0.01);
        assert_relative_eq!(beam_power(1e6, 1e12, 2e-6), p / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn counting_invariant_holds() {
        let cfg = quick_cfg(Model::NonlocalCollapse, 0.0, 1);
        let pairs = cfg.pair_count().unwrap();
        for i in 0..32 {
            let s = sample_run(&cfg, i).unwrap();
            assert_eq!(s.n_left + s.n_right, pairs);
            assert_eq!(s.delta_n, s.n_left as i64 - s.n_right as i64);
        }
    }

    #[test]
    fn null_model_without_noise_reads_zero() {
        let cfg = quick_cfg(Model::NoSignalingNull, 0.0, 1);
        for i in 0..16 {
            let s = sample_run(&cfg, i).unwrap();
            assert_eq!(s.omega_p, 0.0);
            assert_eq!(s.theta_deg, 0.0);
        }
    }

    #[test]
    fn noiseless_readout_equals_detector_formula_exactly() {
        let cfg = quick_cfg(Model::NonlocalCollapse, 0.0, 1);
        let i_m = cfg.plate.moment_of_inertia();
        for i in 0..16 {
            let s = sample_run(&cfg, i).unwrap();
            assert_eq!(
                s.omega_p,
                mechdetect::omega_p(cfg.gain, s.delta_n as f64, i_m),
                "readout must be the detector formula bit-for-bit at sigma_omega = 0"
            );
            assert_eq!(s.theta_deg, mechdetect::rotation_angle(s.omega_p, cfg.tau));
        }
    }

    #[test]
    fn collapse_model_readout_has_the_right_scale() {
        // E|delta_n| = sqrt(2 N / pi) at N = 1e8 puts |omega_p| near the
        // design magnitude; check the mean over a few hundred runs
        let cfg = quick_cfg(Model::NonlocalCollapse, 0.0, 400);
        let result = run_campaign(&cfg).unwrap();
        let half_normal = (2.0 * 1e8 / std::f64::consts::PI).sqrt();
        let i_m = cfg.plate.moment_of_inertia();
        let expected = mechdetect::omega_p(cfg.gain, half_normal, i_m);
        assert_relative_eq!(result.summary.mean_abs_omega_p, expected, max_relative = 0.10);
        // and the typical single-run magnitude is of order 2.6e-5
        assert!(result.summary.mean_abs_omega_p > 2.6e-5 / 3.0);
        assert!(result.summary.mean_abs_omega_p < 2.6e-5 * 3.0);
    }

    #[test]
    fn correlation_examples() {
        let deltas: Vec<f64> = vec![3.0, -1.0, 4.0, -1.5, 9.0, -2.6];
        let scaled: Vec<f64> = deltas.iter().map(|d| 3.7e-9 * d).collect();
        let c = correlation(&scaled, &deltas).unwrap();
        assert!((c.c_p - 1.0).abs() < 1e-12);

        let negated: Vec<f64> = deltas.iter().map(|d| -2.0 * d).collect();
        let c = correlation(&negated, &deltas).unwrap();
        assert!((c.c_p + 1.0).abs() < 1e-12);
    }

    #[test]
    fn correlation_error_paths() {
        assert_eq!(
            correlation(&[1.0], &[1.0, 2.0]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
        assert_eq!(correlation(&[], &[]), Err(Error::EmptySeries));
        assert_eq!(
            correlation(&[0.0, 0.0], &[1.0, 2.0]),
            Err(Error::UndefinedCorrelation)
        );
        assert_eq!(
            correlation(&[1.0, 2.0], &[0.0, 0.0]),
            Err(Error::UndefinedCorrelation)
        );
    }

    #[test]
    fn null_model_with_zero_noise_raises_undefined_correlation() {
        let cfg = quick_cfg(Model::NoSignalingNull, 0.0, 100);
        assert_eq!(run_campaign(&cfg), Err(Error::UndefinedCorrelation));
    }

    #[test]
    fn noiseless_collapse_campaign_has_unit_witness() {
        let result = run_campaign(&quick_cfg(Model::NonlocalCollapse, 0.0, 100)).unwrap();
        assert!((result.correlation.c_p - 1.0).abs() < 1e-9);
    }

    #[test]
    fn noisy_collapse_witness_matches_analytic_value() {
        // noise at half the typical signal scale: C_p = 1/sqrt(1 + 1/4)
        let base = ExperimentConfig::default();
        let i_m = base.plate.moment_of_inertia();
        let signal = mechdetect::omega_p(base.gain, 1e4, i_m);
        let cfg = quick_cfg(Model::NonlocalCollapse, 0.5 * signal, 1000);
        let result = run_campaign(&cfg).unwrap();
        let oracle = 1.0 / (1.0 + 0.25f64).sqrt();
        assert!(
            (result.correlation.c_p - oracle).abs() < 0.02,
            "C_p = {}, oracle {oracle}",
            result.correlation.c_p
        );
    }

    #[test]
    fn model_separation_is_wide() {
        let base = ExperimentConfig::default();
        let i_m = base.plate.moment_of_inertia();
        let sigma = 0.1 * mechdetect::omega_p(base.gain, 1e4, i_m);
        let collapse = run_campaign(&quick_cfg(Model::NonlocalCollapse, sigma, 1000)).unwrap();
        let null = run_campaign(&quick_cfg(Model::NoSignalingNull, sigma, 1000)).unwrap();
        assert!(collapse.correlation.c_p - null.correlation.c_p.abs() > 0.9);
    }

    #[test]
    fn null_model_witness_stays_small_over_many_runs() {
        let null = run_campaign(&quick_cfg(Model::NoSignalingNull, 1e-6, 10_000)).unwrap();
        assert!(
            null.correlation.c_p.abs() < 0.05,
            "C_p = {}",
            null.correlation.c_p
        );
    }

    #[test]
    fn campaign_is_deterministic_and_order_independent() {
        let cfg = quick_cfg(Model::NonlocalCollapse, 1e-6, 64);
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a, b);
        // parallel collect equals an explicitly sequential loop
        let sequential: Vec<RunSample> = (0..64)
            .map(|i| sample_run(&cfg, i).unwrap())
            .collect();
        assert_eq!(a.samples, sequential);
    }

    #[test]
    fn imbalance_statistics_match_binomial_law() {
        // 10_000 repetitions at N = 1e4 (exact-inversion regime)
        let cfg = ExperimentConfig {
            t_run: 1e-8,
            repetitions: 10_000,
            ..ExperimentConfig::default()
        };
        let n = cfg.pair_count().unwrap();
        assert_eq!(n, 10_000);
        let result = run_campaign(&cfg).unwrap();
        let deltas: Vec<f64> = result.samples.iter().map(|s| s.delta_n as f64).collect();
        let runs = deltas.len() as f64;
        let mean = deltas.iter().sum::<f64>() / runs;
        let var = deltas.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / (runs - 1.0);
        let n_f = n as f64;
        assert!(
            mean.abs() < 4.0 * n_f.sqrt() / runs.sqrt(),
            "mean delta_n = {mean}"
        );
        assert!(
            (var - n_f).abs() < 0.10 * n_f,
            "var = {var}, binomial variance of delta_n is N = {n_f}"
        );
    }

    #[test]
    fn microscopic_measurements_reproduce_the_aggregate_law() {
        // ten sequential projective measurements per trial, compared to the
        // closed-form binomial the sampler uses
        use crate::polarization::{bell_state, measure_party, MeasurementBasis, Party};

        let circ = MeasurementBasis::circular();
        let mut rng = stream_rng(99, 0);
        let trials = 100_000usize;
        let mut hist = [0u64; 11];
        for _ in 0..trials {
            let mut lefts = 0usize;
            for _ in 0..10 {
                let u: f64 = rng.random();
                if measure_party(&bell_state(), Party::One, &circ, u).outcome_index == 0 {
                    lefts += 1;
                }
            }
            hist[lefts] += 1;
        }
        // chi-square against C(10,k)/2^10
        let mut chi2 = 0.0;
        for (k, &obs) in hist.iter().enumerate() {
            let choose = (0..k).fold(1.0, |acc, i| acc * (10 - i) as f64 / (i + 1) as f64);
            let expected = trials as f64 * choose / 1024.0;
            chi2 += (obs as f64 - expected).powi(2) / expected;
        }
        assert!(chi2 < 29.6, "chi2 = {chi2} over 10 dof"); // p ~ 0.001 cut
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let cfg = ExperimentConfig {
            gain: 0.0,
            ..ExperimentConfig::default()
        };
        assert!(matches!(
            cfg.validate(),
            Err(Error::NonPositive { name: "gain", .. })
        ));

        let cfg = ExperimentConfig {
            repetitions: 0,
            ..ExperimentConfig::default()
        };
        assert_eq!(cfg.validate(), Err(Error::NoRepetitions));

        let cfg = ExperimentConfig {
            sigma_omega: -1.0,
            ..ExperimentConfig::default()
        };
        assert!(matches!(cfg.validate(), Err(Error::Negative { .. })));

        let cfg = ExperimentConfig {
            t_run: 1e10,
            n_gamma: 1e10,
            ..ExperimentConfig::default()
        };
        assert!(matches!(
            cfg.validate(),
            Err(Error::PairCountOverflow { .. })
        ));
    }

    #[test]
    fn degenerate_geometry_surfaces_from_campaign() {
        let cfg = ExperimentConfig {
            x1: 3e4,
            repetitions: 2,
            ..ExperimentConfig::default()
        };
        assert_eq!(run_campaign(&cfg), Err(Error::DegenerateGeometry));
    }

    #[test]
    fn witness_magnitude_is_bounded() {
        // Cauchy-Schwarz puts |c_p| at 1 even for wildly mixed scales
        let w = [1e150, -1e150, 1e-150, 5.0];
        let d = [-1e150, 1e150, 2.0, -7.0];
        let c = correlation(&w, &d).unwrap();
        assert!(c.c_p.abs() <= 1.0 + 1e-12, "c_p = {}", c.c_p);
    }

    #[test]
    fn summary_reports_the_design_numbers() {
        let result = run_campaign(&quick_cfg(Model::NonlocalCollapse, 0.0, 8)).unwrap();
        let s = result.summary;
        assert_relative_eq!(s.predicted_omega_p, 2.60e-5, max_relative = 0.01);
        assert_relative_eq!(s.predicted_theta_deg, 0.447, max_relative = 0.01);
        assert_relative_eq!(s.beam_power_w, 0.1986, max_relative = 0.01);
        assert_relative_eq!(s.vli_threshold_m_per_s, 3.0, max_relative = 2e-3);
    }
}
