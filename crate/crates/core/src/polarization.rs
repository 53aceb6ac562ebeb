//! Two-photon polarization states and projective measurement.
//!
//! Amplitudes are double-precision complex pairs over the linear basis
//! {|H>, |V>}; the pair state lives on the ordered product basis
//! {HH, HV, VH, VV}. The state space is four-dimensional, so plain numerics
//! are exact enough; there is no symbolic layer.
//!
//! Circular-polarization kets follow the convention
//!
//! ```text
//! |L> = (|H> - i|V>) / sqrt(2),      |R> = (|H> + i|V>) / sqrt(2),
//! ```
//!
//! which is the single source of handedness truth for the whole crate
//! (optics texts disagree on the sign). Substituting these kets into
//! (|HH> + |VV>)/sqrt(2) gives (|LR> + |RL>)/sqrt(2) with no residual
//! phase; the circular-basis tests pin that expansion.
//!
//! Global phase is never normalized away. State comparisons go through
//! overlap magnitudes, not componentwise equality.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for normalization and orthogonality checks.
pub const STATE_TOL: f64 = 1e-12;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Single-photon polarization state `a_h |H> + a_v |V>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationState {
    a_h: Complex64,
    a_v: Complex64,
}

impl PolarizationState {
    /// Builds a state, rejecting unnormalized amplitude pairs.
    pub fn new(a_h: Complex64, a_v: Complex64) -> Result<Self> {
        let norm_sqr = a_h.norm_sqr() + a_v.norm_sqr();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > STATE_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { a_h, a_v })
    }

    pub(crate) fn new_unchecked(a_h: Complex64, a_v: Complex64) -> Self {
        Self { a_h, a_v }
    }

    /// |H>
    pub fn horizontal() -> Self {
        Self {
            a_h: Complex64::ONE,
            a_v: Complex64::ZERO,
        }
    }

    /// |V>
    pub fn vertical() -> Self {
        Self {
            a_h: Complex64::ZERO,
            a_v: Complex64::ONE,
        }
    }

    /// Left-hand circular state (|H> - i|V>)/sqrt(2).
    pub fn left() -> Self {
        Self {
            a_h: Complex64::new(FRAC_1_SQRT_2, 0.0),
            a_v: Complex64::new(0.0, -FRAC_1_SQRT_2),
        }
    }

    /// Right-hand circular state (|H> + i|V>)/sqrt(2).
    pub fn right() -> Self {
        Self {
            a_h: Complex64::new(FRAC_1_SQRT_2, 0.0),
            a_v: Complex64::new(0.0, FRAC_1_SQRT_2),
        }
    }

    pub fn amp_h(&self) -> Complex64 {
        self.a_h
    }

    pub fn amp_v(&self) -> Complex64 {
        self.a_v
    }

    /// Inner product `<self|other>` (self conjugated).
    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.a_h.conj() * other.a_h + self.a_v.conj() * other.a_v
    }

    /// The state orthogonal to this one (up to phase).
    pub fn orthogonal(&self) -> Self {
        Self {
            a_h: -self.a_v.conj(),
            a_v: self.a_h.conj(),
        }
    }
}

/// Two-photon state over the ordered basis {HH, HV, VH, VV}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipartiteState {
    amps: [Complex64; 4],
}

impl BipartiteState {
    /// Builds a state, rejecting unnormalized amplitude vectors.
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > STATE_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amps })
    }

    /// Amplitudes in the {HH, HV, VH, VV} order.
    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Rebuilds a computational-basis state from product-basis coefficients,
    /// the inverse of [`express_in_basis`].
    pub fn from_basis_coefficients(
        coeffs: [Complex64; 4],
        basis1: &MeasurementBasis,
        basis2: &MeasurementBasis,
    ) -> Result<Self> {
        let e = [basis1.e0, basis1.e1];
        let f = [basis2.e0, basis2.e1];
        let mut amps = [Complex64::ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                let c = coeffs[2 * i + j];
                let ei = [e[i].a_h, e[i].a_v];
                let fj = [f[j].a_h, f[j].a_v];
                for (m, em) in ei.iter().enumerate() {
                    for (n, fjn) in fj.iter().enumerate() {
                        amps[2 * m + n] += c * em * fjn;
                    }
                }
            }
        }
        Self::new(amps)
    }
}

/// The maximally entangled pair state (|HH> + |VV>)/sqrt(2).
pub fn bell_state() -> BipartiteState {
    BipartiteState {
        amps: [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ],
    }
}

/// An analyzer setting: an orthonormal pair of single-photon states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    e0: PolarizationState,
    e1: PolarizationState,
}

impl MeasurementBasis {
    /// Builds a basis from two states, rejecting non-orthogonal pairs.
    /// Normalization is already guaranteed by [`PolarizationState`].
    pub fn new(e0: PolarizationState, e1: PolarizationState) -> Result<Self> {
        let overlap = e0.overlap(&e1).norm();
        if overlap >= STATE_TOL {
            return Err(Error::NotOrthogonal { overlap });
        }
        Ok(Self { e0, e1 })
    }

    /// Linear basis {|H>, |V>}.
    pub fn linear() -> Self {
        Self {
            e0: PolarizationState::horizontal(),
            e1: PolarizationState::vertical(),
        }
    }

    /// Circular basis {|L>, |R>}.
    pub fn circular() -> Self {
        Self {
            e0: PolarizationState::left(),
            e1: PolarizationState::right(),
        }
    }

    pub fn e0(&self) -> &PolarizationState {
        &self.e0
    }

    pub fn e1(&self) -> &PolarizationState {
        &self.e1
    }

    /// Eigenstate for an outcome index (0 or 1).
    pub fn eigenstate(&self, index: u8) -> &PolarizationState {
        if index == 0 {
            &self.e0
        } else {
            &self.e1
        }
    }
}

/// Which photon of the pair a measurement acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    /// First photon (the analyzer side).
    One,
    /// Second photon (the detector side).
    Two,
}

/// Result of a projective measurement on one party.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    /// 0 for the basis state `e0`, 1 for `e1`.
    pub outcome_index: u8,
    /// Born probability of the realized outcome.
    pub probability: f64,
    /// Renormalized partner state conditioned on the outcome.
    pub collapsed_partner: PolarizationState,
}

/// Coefficients of `state` in the product basis `basis1 x basis2`,
/// ordered {e0 f0, e0 f1, e1 f0, e1 f1}.
///
/// Bases are orthonormal by construction of [`MeasurementBasis`], so the
/// change of basis is unitary and preserves the norm.
pub fn express_in_basis(
    state: &BipartiteState,
    basis1: &MeasurementBasis,
    basis2: &MeasurementBasis,
) -> [Complex64; 4] {
    let e = [basis1.e0, basis1.e1];
    let f = [basis2.e0, basis2.e1];
    let mut out = [Complex64::ZERO; 4];
    for i in 0..2 {
        for j in 0..2 {
            let ei = [e[i].a_h.conj(), e[i].a_v.conj()];
            let fj = [f[j].a_h.conj(), f[j].a_v.conj()];
            let mut c = Complex64::ZERO;
            for (m, em) in ei.iter().enumerate() {
                for (n, fjn) in fj.iter().enumerate() {
                    c += em * fjn * state.amps[2 * m + n];
                }
            }
            out[2 * i + j] = c;
        }
    }
    out
}

/// Projects one party of `state` onto `eigen`; returns the unnormalized
/// partner amplitudes and the branch probability.
fn project(
    state: &BipartiteState,
    party: Party,
    eigen: &PolarizationState,
) -> ([Complex64; 2], f64) {
    let a = state.amps;
    let ec = [eigen.a_h.conj(), eigen.a_v.conj()];
    let phi = match party {
        Party::One => [ec[0] * a[0] + ec[1] * a[2], ec[0] * a[1] + ec[1] * a[3]],
        Party::Two => [ec[0] * a[0] + ec[1] * a[1], ec[0] * a[2] + ec[1] * a[3]],
    };
    let p = phi[0].norm_sqr() + phi[1].norm_sqr();
    (phi, p)
}

/// Projective measurement of one party, consuming an externally supplied
/// uniform draw `u` in [0, 1).
///
/// The outcome is `e0` when `u` falls below its Born probability, `e1`
/// otherwise; the partner state is the renormalized conditional state.
/// Keeping the randomness outside makes the operation a pure function.
/// A zero-probability branch cannot be selected: `u` is strictly below 1,
/// and the guard below covers the rounding corner where the complementary
/// branch carries exactly zero weight.
pub fn measure_party(
    state: &BipartiteState,
    party: Party,
    basis: &MeasurementBasis,
    u: f64,
) -> MeasurementOutcome {
    debug_assert!((0.0..1.0).contains(&u), "u must be in [0, 1), got {u}");
    let (phi0, p0) = project(state, party, &basis.e0);
    let (phi1, p1) = project(state, party, &basis.e1);
    let (outcome_index, phi, p) = if u < p0 || p1 == 0.0 {
        (0u8, phi0, p0)
    } else {
        (1u8, phi1, p1)
    };
    let inv = p.sqrt().recip();
    MeasurementOutcome {
        outcome_index,
        probability: p,
        collapsed_partner: PolarizationState::new_unchecked(phi[0] * inv, phi[1] * inv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bell_state_amplitudes() {
        let amps = bell_state().amplitudes();
        assert_relative_eq!(amps[0].re, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_relative_eq!(amps[3].re, FRAC_1_SQRT_2, epsilon = 1e-12);
        for a in [amps[1], amps[2]] {
            assert!(a.norm() < 1e-15);
        }
        assert!((bell_state().norm_sqr() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn bell_state_in_circular_basis() {
        // expansion lands on LR and RL only, each with amplitude 1/sqrt(2)
        let circ = MeasurementBasis::circular();
        let coeffs = express_in_basis(&bell_state(), &circ, &circ);
        assert!(coeffs[0].norm() < 1e-12, "LL amplitude should vanish");
        assert!(coeffs[3].norm() < 1e-12, "RR amplitude should vanish");
        assert_relative_eq!(coeffs[1].re, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_relative_eq!(coeffs[2].re, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert!(coeffs[1].im.abs() < 1e-12 && coeffs[2].im.abs() < 1e-12);
    }

    #[test]
    fn bell_state_in_linear_basis_is_identity() {
        let lin = MeasurementBasis::linear();
        let coeffs = express_in_basis(&bell_state(), &lin, &lin);
        let amps = bell_state().amplitudes();
        for (got, want) in coeffs.iter().zip(amps.iter()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn express_then_invert_round_trips() {
        let state = BipartiteState::new([
            c(0.5, 0.1),
            c(-0.3, 0.2),
            c(0.0, -0.5),
            c(0.6, 0.0),
        ])
        .expect("hand-normalized");
        let b1 = MeasurementBasis::circular();
        let e0 = PolarizationState::new(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let b2 = MeasurementBasis::new(e0, e0.orthogonal()).unwrap();
        let coeffs = express_in_basis(&state, &b1, &b2);
        let back = BipartiteState::from_basis_coefficients(coeffs, &b1, &b2).unwrap();
        for (got, want) in back.amplitudes().iter().zip(state.amplitudes().iter()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn born_probabilities_from_independent_dot_products() {
        // brute-force oracle: raw conjugated four-component dot products,
        // no basis-change machinery involved
        let psi = bell_state().amplitudes();
        let l = PolarizationState::left();
        let r = PolarizationState::right();
        let product = |a: &PolarizationState, b: &PolarizationState| -> Complex64 {
            let bra = [
                a.amp_h().conj() * b.amp_h().conj(),
                a.amp_h().conj() * b.amp_v().conj(),
                a.amp_v().conj() * b.amp_h().conj(),
                a.amp_v().conj() * b.amp_v().conj(),
            ];
            bra.iter().zip(psi.iter()).map(|(x, y)| x * y).sum()
        };
        let p_l = product(&l, &l).norm_sqr() + product(&l, &r).norm_sqr();
        let p_r = product(&r, &l).norm_sqr() + product(&r, &r).norm_sqr();
        assert_relative_eq!(p_l, 0.5, epsilon = 1e-12);
        assert_relative_eq!(p_r, 0.5, epsilon = 1e-12);

        // marginals are basis independent: {H,V} on the same state also gives 1/2
        let h = PolarizationState::horizontal();
        let v = PolarizationState::vertical();
        let p_h = product(&h, &h).norm_sqr() + product(&h, &v).norm_sqr();
        assert_relative_eq!(p_h, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn circular_measurement_collapses_partner() {
        let circ = MeasurementBasis::circular();
        let out = measure_party(&bell_state(), Party::One, &circ, 0.3);
        assert_eq!(out.outcome_index, 0, "u = 0.3 lands in the |L> branch");
        assert_relative_eq!(out.probability, 0.5, epsilon = 1e-12);
        let r = PolarizationState::right();
        assert_relative_eq!(r.overlap(&out.collapsed_partner).norm(), 1.0, epsilon = 1e-12);

        let out = measure_party(&bell_state(), Party::One, &circ, 0.7);
        assert_eq!(out.outcome_index, 1, "u = 0.7 lands in the |R> branch");
        let l = PolarizationState::left();
        assert_relative_eq!(l.overlap(&out.collapsed_partner).norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn party_two_measurement_collapses_party_one() {
        let circ = MeasurementBasis::circular();
        let out = measure_party(&bell_state(), Party::Two, &circ, 0.1);
        assert_eq!(out.outcome_index, 0);
        let r = PolarizationState::right();
        assert_relative_eq!(r.overlap(&out.collapsed_partner).norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn measurement_marginal_matches_basis_change() {
        // P(e0) computed via measure_party agrees between bases on the pair state
        let lin = MeasurementBasis::linear();
        let circ = MeasurementBasis::circular();
        let p_lin = measure_party(&bell_state(), Party::One, &lin, 0.0).probability;
        let p_circ = measure_party(&bell_state(), Party::One, &circ, 0.0).probability;
        assert_relative_eq!(p_lin, p_circ, epsilon = 1e-12);
        assert_relative_eq!(p_lin, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn seeded_anticorrelation_holds_over_many_draws() {
        let circ = MeasurementBasis::circular();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let u: f64 = rng.random();
            let out = measure_party(&bell_state(), Party::One, &circ, u);
            let eigen = circ.eigenstate(out.outcome_index);
            assert!(
                eigen.overlap(&out.collapsed_partner).norm() < 1e-12,
                "partner must be orthogonal to the measured outcome"
            );
        }
    }

    #[test]
    fn seeded_outcome_frequency_is_half() {
        let circ = MeasurementBasis::circular();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 100_000;
        let mut lefts = 0u64;
        for _ in 0..n {
            let u: f64 = rng.random();
            if measure_party(&bell_state(), Party::One, &circ, u).outcome_index == 0 {
                lefts += 1;
            }
        }
        let p = lefts as f64 / n as f64;
        let bound = 3.0 * (0.25 / n as f64).sqrt();
        assert!((p - 0.5).abs() < bound, "P(L) = {p}, bound {bound}");
    }

    #[test]
    fn unnormalized_state_is_rejected() {
        assert!(matches!(
            PolarizationState::new(c(1.0, 0.0), c(0.1, 0.0)),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            BipartiteState::new([c(1.0, 0.0); 4]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn non_orthogonal_basis_is_rejected() {
        let h = PolarizationState::horizontal();
        let diag = PolarizationState::new(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
        assert!(matches!(
            MeasurementBasis::new(h, diag),
            Err(Error::NotOrthogonal { .. })
        ));
    }
}
