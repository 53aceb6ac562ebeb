//! Lorentz kinematics along the beam axis for the detection events.
//!
//! Boosts act along x only. The time-ordering helper works directly on
//! coordinate differences: in the regime of interest (boosts of a few m/s,
//! separations of kilometers and picoseconds) gamma - 1 is ~1e-17, so
//! differencing two boosted absolute times of order seconds would cancel
//! catastrophically, while the delta form keeps full precision. That is
//! why [`time_order_delta`] exists as its own operation instead of being
//! two [`boost`] calls.

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};

const C: f64 = SPEED_OF_LIGHT;

/// Which detection an event belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectorSite {
    Alice,
    Bob,
    Charlie,
}

impl DetectorSite {
    /// Conventional detector index: Alice 1, Bob 2, Charlie 3.
    pub fn index(self) -> u8 {
        match self {
            DetectorSite::Alice => 1,
            DetectorSite::Bob => 2,
            DetectorSite::Charlie => 3,
        }
    }
}

/// A detection event on the beam axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeEvent {
    pub x: f64,
    pub t: f64,
    pub label: DetectorSite,
}

impl SpacetimeEvent {
    /// Builds an event, rejecting non-finite coordinates.
    pub fn new(x: f64, t: f64, label: DetectorSite) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite { name: "x", value: x });
        }
        if !t.is_finite() {
            return Err(Error::NonFinite { name: "t", value: t });
        }
        Ok(Self { x, t, label })
    }
}

/// An inertial observer moving at `v` along x relative to the lab.
///
/// `|v| < c` strictly, enforced at construction, which is what makes
/// [`boost`] itself infallible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObserverFrame {
    v: f64,
}

impl ObserverFrame {
    pub fn new(v: f64) -> Result<Self> {
        if !v.is_finite() || v.abs() >= C {
            return Err(Error::SuperluminalFrame { v });
        }
        Ok(Self { v })
    }

    /// The lab frame itself, v = 0.
    pub fn lab() -> Self {
        Self { v: 0.0 }
    }

    pub fn velocity(&self) -> f64 {
        self.v
    }

    fn inv_gamma(&self) -> f64 {
        let beta = self.v / C;
        (1.0 - beta * beta).sqrt()
    }
}

/// Standard boost of an event into `frame`; the label rides along.
pub fn boost(event: &SpacetimeEvent, frame: &ObserverFrame) -> SpacetimeEvent {
    let ig = frame.inv_gamma();
    SpacetimeEvent {
        x: (event.x - frame.v * event.t) / ig,
        t: (event.t - frame.v * event.x / (C * C)) / ig,
        label: event.label,
    }
}

/// Transformed time separation t'(e3) - t'(e1), computed in delta form.
pub fn time_order_delta(e1: &SpacetimeEvent, e3: &SpacetimeEvent, frame: &ObserverFrame) -> f64 {
    ((e3.t - e1.t) - frame.v * (e3.x - e1.x) / (C * C)) / frame.inv_gamma()
}

/// Minimum boost speed at which the two detections change order,
/// c^2 |t3 - t1| / |x3 - x1|.
///
/// Exceeds c for timelike-separated events: no admissible frame reorders
/// those. Errors when the events share a position, since boosting along x
/// can never reorder them.
pub fn vli_threshold(e1: &SpacetimeEvent, e3: &SpacetimeEvent) -> Result<f64> {
    if e1.x == e3.x {
        return Err(Error::DegenerateGeometry);
    }
    Ok(C * C * (e3.t - e1.t).abs() / (e3.x - e1.x).abs())
}

/// Detector readout implied by the event order in some frame, hbar units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedDeltaL {
    /// The far photon reaches the plates still undetermined: no kick.
    Zero,
    /// The analyzer fires first in this frame: |delta_l| = 4, sign set by
    /// the analyzer outcome.
    PlusMinusFour,
    /// Exactly simultaneous in this frame; the model does not assign a
    /// reading on the boundary.
    Degenerate,
}

impl ExpectedDeltaL {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpectedDeltaL::Zero => "0",
            ExpectedDeltaL::PlusMinusFour => "+-4",
            ExpectedDeltaL::Degenerate => "degenerate",
        }
    }
}

impl std::fmt::Display for ExpectedDeltaL {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Frame-dependent classification of the detector outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderingVerdict {
    /// t'(e3) - t'(e1) in the observer's frame, seconds.
    pub t_prime_delta: f64,
    /// True iff the analyzer event comes first in this frame, i.e. the far
    /// photon is already collapsed when it reaches the plates.
    pub collapsed_before_detector: bool,
    pub expected_delta_l: ExpectedDeltaL,
}

/// Classifies the detector outcome an observer in `frame` expects, given
/// the analyzer event `e1` and the plate-detector event `e3`.
pub fn classify_outcome(
    e1: &SpacetimeEvent,
    e3: &SpacetimeEvent,
    frame: &ObserverFrame,
) -> OrderingVerdict {
    let delta = time_order_delta(e1, e3, frame);
    let (collapsed, expected) = if delta > 0.0 {
        (true, ExpectedDeltaL::PlusMinusFour)
    } else if delta < 0.0 {
        (false, ExpectedDeltaL::Zero)
    } else {
        (false, ExpectedDeltaL::Degenerate)
    };
    OrderingVerdict {
        t_prime_delta: delta,
        collapsed_before_detector: collapsed,
        expected_delta_l: expected,
    }
}
