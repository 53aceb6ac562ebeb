//! Mechanical detection of circular polarization.
//!
//! A circularly polarized photon carries one hbar of spin angular momentum.
//! A half-wave plate reverses the handedness in flight, so the photon hands
//! the plate 2 hbar; a second plate flips it back and is kicked by 2 hbar of
//! the opposite sign. After both crossings the photon leaves in the state it
//! arrived in, while the two plates record opposite angular-momentum changes
//! whose difference is 4 hbar per circularly polarized photon. A linearly
//! polarized photon carries no spin angular momentum and leaves both plates
//! untouched.
//!
//! Plate angular momenta are book-kept as exact integers in units of hbar;
//! conversion to SI happens only at the output boundary, so 1e8-photon
//! sequences accumulate no float error.

use crate::constants::HBAR;
use crate::error::{Error, Result};

/// Geometry and material of one disk-shaped half-wave plate.
///
/// Invariants: all quantities strictly positive, and the thickness may not
/// fall below the zero-order half-wave floor `design_lambda / (2 delta_n)`
/// (minus a 1e-12 m slack for rounding of back-solved birefringences).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePlateSpec {
    rho: f64,
    thickness: f64,
    radius: f64,
    delta_n: f64,
    design_lambda: f64,
}

impl WavePlateSpec {
    /// Builds a validated plate.
    ///
    /// `rho` is the mass density in kg/m^3, `thickness` and `radius` are in
    /// meters, `delta_n` is the material birefringence and `design_lambda`
    /// the wavelength the plate is cut for.
    pub fn new(
        rho: f64,
        thickness: f64,
        radius: f64,
        delta_n: f64,
        design_lambda: f64,
    ) -> Result<Self> {
        for (name, value) in [
            ("rho", rho),
            ("thickness", thickness),
            ("radius", radius),
            ("delta_n", delta_n),
            ("design_lambda", design_lambda),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::NonPositive { name, value });
            }
        }
        let floor = min_thickness(design_lambda, delta_n)?;
        if thickness < floor - 1e-12 {
            return Err(Error::PlateTooThin { thickness, floor });
        }
        Ok(Self {
            rho,
            thickness,
            radius,
            delta_n,
            design_lambda,
        })
    }

    /// A plate cut exactly at the half-wave floor thickness.
    pub fn half_wave(rho: f64, radius: f64, delta_n: f64, design_lambda: f64) -> Result<Self> {
        let thickness = min_thickness(design_lambda, delta_n)?;
        Self::new(rho, thickness, radius, delta_n, design_lambda)
    }

    /// Moment of inertia of the disk about the beam axis, kg m^2:
    /// (pi/2) rho D r^4.
    pub fn moment_of_inertia(&self) -> f64 {
        (std::f64::consts::PI / 2.0) * self.rho * self.thickness * self.radius.powi(4)
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn delta_n(&self) -> f64 {
        self.delta_n
    }

    pub fn design_lambda(&self) -> f64 {
        self.design_lambda
    }
}

/// Minimum (zero-order half-wave) plate thickness, `lambda / (2 delta_n)`.
pub fn min_thickness(lambda: f64, delta_n: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::NonPositive {
            name: "lambda",
            value: lambda,
        });
    }
    if !delta_n.is_finite() || delta_n <= 0.0 {
        return Err(Error::NonPositive {
            name: "delta_n",
            value: delta_n,
        });
    }
    Ok(lambda / (2.0 * delta_n))
}

/// Photon classification as seen by the plate detector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
    /// |H> or |V>: no spin angular momentum.
    Linear,
}

/// Angular-momentum bookkeeping for the two plates, in integer hbar units.
///
/// After any sequence of circularly polarized photons, `l1 == -l2` exactly
/// and the readout `delta_l = l2 - l1` is a multiple of 4.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DetectorRecord {
    l1: i64,
    l2: i64,
    photon_count: u64,
}

impl DetectorRecord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Angular momentum of the first plate, hbar units.
    pub fn l1(&self) -> i64 {
        self.l1
    }

    /// Angular momentum of the second plate, hbar units.
    pub fn l2(&self) -> i64 {
        self.l2
    }

    pub fn photon_count(&self) -> u64 {
        self.photon_count
    }

    /// Detector readout `l2 - l1`, hbar units.
    pub fn delta_l(&self) -> i64 {
        self.l2 - self.l1
    }

    /// Feeds one photon through both plates and returns the updated record.
    ///
    /// Sign convention, fixed here once for the whole crate: a left-handed
    /// photon increments the first plate (+2) and decrements the second
    /// (-2), so one left photon reads delta_l = -4. Only |delta_l| is set
    /// by the angular-momentum budget; the sign map is ours. The photon's
    /// polarization state is never altered: the second plate undoes the
    /// handedness flip of the first (pass-through contract).
    #[must_use]
    pub fn apply_photon(self, photon: Handedness) -> Self {
        let (d1, d2) = match photon {
            Handedness::Left => (2, -2),
            Handedness::Right => (-2, 2),
            Handedness::Linear => (0, 0),
        };
        Self {
            l1: self.l1 + d1,
            l2: self.l2 + d2,
            photon_count: self.photon_count + 1,
        }
    }
}

/// Magnitude of the angular-velocity change of a single plate per
/// circularly polarized photon, 2 hbar / I, rad/s. Requires `i_m > 0`.
pub fn kick_angular_velocity(i_m: f64) -> f64 {
    debug_assert!(i_m > 0.0);
    2.0 * HBAR / i_m
}

/// Change of the plates' relative angular velocity caused by an amplified
/// photon stream, 4 hbar G delta_n / I, rad/s.
///
/// `delta_n` is the signed left-right count imbalance recorded at the
/// analyzer (each of those photons arrives `gain` times), so the result is
/// signed with it. Requires `i_m > 0` and `gain >= 1`.
pub fn omega_p(gain: f64, delta_n: f64, i_m: f64) -> f64 {
    debug_assert!(i_m > 0.0 && gain >= 1.0);
    4.0 * HBAR * gain * delta_n / i_m
}

/// Relative rotation angle accumulated over `tau` seconds of free rotation,
/// in degrees. Requires `tau >= 0`.
pub fn rotation_angle(omega_p: f64, tau: f64) -> f64 {
    debug_assert!(tau >= 0.0);
    (omega_p * tau).to_degrees()
}
