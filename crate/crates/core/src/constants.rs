//! Physical constants, SI 2019 exact values.

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact by definition).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Planck constant, J s (exact by definition).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant h/2pi, J s.
pub const HBAR: f64 = PLANCK / (2.0 * std::f64::consts::PI);

/// The constants the simulation depends on, bundled as a value.
///
/// `hbar` is redundant with `h`; it is carried explicitly so the
/// consistency requirement `hbar = h/2pi` is stated and checked in one
/// place instead of being re-derived at every call site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J s.
    pub hbar: f64,
    /// Planck constant, J s.
    pub h: f64,
    /// Speed of light in vacuum, m/s.
    pub c: f64,
}

impl PhysicalConstants {
    /// SI values.
    pub const fn si() -> Self {
        Self {
            hbar: HBAR,
            h: PLANCK,
            c: SPEED_OF_LIGHT,
        }
    }

    /// Validated constructor; `hbar` must equal `h/2pi` to 1e-12 relative.
    pub fn new(hbar: f64, h: f64, c: f64) -> Result<Self> {
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::NonPositive {
                name: "h",
                value: h,
            });
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::NonPositive {
                name: "c",
                value: c,
            });
        }
        let expected = h / (2.0 * std::f64::consts::PI);
        if !hbar.is_finite() || (hbar - expected).abs() > 1e-12 * expected {
            return Err(Error::InconsistentConstants { hbar, h });
        }
        Ok(Self { hbar, h, c })
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::si()
    }
}
