use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by state construction and simulation operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state is not normalized: squared amplitudes sum to {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("basis states are not orthogonal: |<e0|e1>| = {overlap:.3e}")]
    NotOrthogonal { overlap: f64 },

    #[error("{name} must be strictly positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{name} must be non-negative and finite, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("plate thickness {thickness:.6e} m is below the half-wave floor {floor:.6e} m")]
    PlateTooThin { thickness: f64, floor: f64 },

    #[error("hbar = {hbar:.12e} is inconsistent with h = {h:.12e} (expected h/2pi)")]
    InconsistentConstants { hbar: f64, h: f64 },

    #[error("frame velocity {v} m/s is not strictly below the speed of light")]
    SuperluminalFrame { v: f64 },

    #[error("events share the same position: boosting along x cannot reorder them")]
    DegenerateGeometry,

    #[error(
        "correlation is undefined: a series is identically zero \
         (the null model with sigma_omega = 0 produces this; set sigma_omega > 0)"
    )]
    UndefinedCorrelation,

    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("series are empty")]
    EmptySeries,

    #[error("pair count {pairs:.3e} exceeds the exactly representable integer range (2^53)")]
    PairCountOverflow { pairs: f64 },

    #[error("repetitions must be at least 1")]
    NoRepetitions,
}
