//! Thermal relaxation (T1/T2) as a stochastic single-qubit channel.
//!
//! For an idle or gate duration `t` the channel maps a single-qubit density
//! matrix as
//!
//! ```text
//! rho11 -> rho11 * exp(-t/T1)          (rho00 gains the difference)
//! rho01 -> rho01 * exp(-t/T2)
//! ```
//!
//! which is physical only for `T2 <= 2 T1`. Two trajectory unravellings are
//! provided. [`ChannelImpl::Mixture`] picks one of {identity, phase flip,
//! reset} with fixed probabilities and only exists for `T2 <= T1`.
//! [`ChannelImpl::General`] runs amplitude-damping Kraus selection with
//! state-dependent probabilities followed by a phase flip for the remaining
//! pure dephasing, and covers the whole physical range.

use alloc::string::String;

use num_complex::Complex64;
use rand::Rng;

use super::state::StateVector;
use crate::circuit::{decompose_mc, Circuit, Gate, GateKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NoiseError {
    #[error("T1 must be positive, got {0} us")]
    NonPositiveT1(f64),
    #[error("T2 must satisfy 0 < T2 <= 2*T1, got T1={t1} us, T2={t2} us")]
    UnphysicalT2 { t1: f64, t2: f64 },
    #[error("durations must be positive and finite")]
    BadDuration,
    #[error("mixture unravelling needs T2 <= T1")]
    MixtureNeedsT2BelowT1,
}

/// Gate durations in nanoseconds by duration class.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GateDurations {
    pub u2: f64,
    pub u3: f64,
    pub cx: f64,
}

impl Default for GateDurations {
    fn default() -> Self {
        Self {
            u2: 50.0,
            u3: 100.0,
            cx: 300.0,
        }
    }
}

pub const DEFAULT_READOUT_NS: f64 = 1000.0;

/// Decoherence times (microseconds) and timings (nanoseconds).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NoiseProfile {
    pub name: String,
    pub t1_us: f64,
    pub t2_us: f64,
    #[cfg_attr(feature = "serde", serde(default))]
    pub gate_ns: GateDurations,
    #[cfg_attr(feature = "serde", serde(default = "default_readout"))]
    pub readout_ns: f64,
    #[cfg_attr(feature = "serde", serde(default = "default_idle"))]
    pub apply_idle: bool,
}

#[cfg(feature = "serde")]
fn default_readout() -> f64 {
    DEFAULT_READOUT_NS
}

#[cfg(feature = "serde")]
fn default_idle() -> bool {
    true
}

impl NoiseProfile {
    /// Profile with the default gate and readout timings, idle noise on.
    pub fn new(name: &str, t1_us: f64, t2_us: f64) -> Result<Self, NoiseError> {
        let p = Self {
            name: name.into(),
            t1_us,
            t2_us,
            gate_ns: GateDurations::default(),
            readout_ns: DEFAULT_READOUT_NS,
            apply_idle: true,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), NoiseError> {
        if !self.t1_us.is_finite() || self.t1_us <= 0.0 {
            return Err(NoiseError::NonPositiveT1(self.t1_us));
        }
        if !(self.t2_us > 0.0 && self.t2_us <= 2.0 * self.t1_us) {
            return Err(NoiseError::UnphysicalT2 {
                t1: self.t1_us,
                t2: self.t2_us,
            });
        }
        let d = [self.gate_ns.u2, self.gate_ns.u3, self.gate_ns.cx, self.readout_ns];
        if d.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(NoiseError::BadDuration);
        }
        Ok(())
    }

    /// Unravelling used by default: the mixture when it exists.
    pub fn preferred_impl(&self) -> ChannelImpl {
        if self.t2_us <= self.t1_us {
            ChannelImpl::Mixture
        } else {
            ChannelImpl::General
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelImpl {
    Mixture,
    General,
}

/// Channel parameters for one duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxationChannel {
    /// `exp(-t/T1)`: surviving excited population.
    pub population_decay: f64,
    /// `exp(-t/T2)`: surviving coherence.
    pub coherence_decay: f64,
}

pub fn relaxation_channel(t_ns: f64, profile: &NoiseProfile) -> RelaxationChannel {
    let t_us = t_ns * 1e-3;
    RelaxationChannel {
        population_decay: libm::exp(-t_us / profile.t1_us),
        coherence_decay: libm::exp(-t_us / profile.t2_us),
    }
}

impl RelaxationChannel {
    pub fn is_identity(&self) -> bool {
        self.population_decay == 1.0 && self.coherence_decay == 1.0
    }

    /// Closed-form action on a single-qubit density matrix.
    pub fn apply_to_density(&self, rho: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
        let p1 = rho[1][1] * self.population_decay;
        let p0 = rho[0][0] + rho[1][1] - p1;
        let c = rho[0][1] * self.coherence_decay;
        [[p0, c], [c.conj(), p1]]
    }

    /// One stochastic application to `qubit` of a pure state.
    pub fn apply_trajectory<R: Rng + ?Sized>(
        &self,
        state: &mut StateVector,
        qubit: usize,
        imp: ChannelImpl,
        rng: &mut R,
    ) -> Result<(), NoiseError> {
        if self.is_identity() {
            return Ok(());
        }
        let e1 = self.population_decay;
        let e2 = self.coherence_decay;
        match imp {
            ChannelImpl::Mixture => {
                let p_reset = 1.0 - e1;
                let p_z = (e1 - e2) / 2.0;
                if p_z < -1e-15 {
                    return Err(NoiseError::MixtureNeedsT2BelowT1);
                }
                let r: f64 = rng.gen();
                if r < p_reset {
                    let p1 = state.excited_population(qubit);
                    if rng.gen::<f64>() < p1 {
                        state.decay(qubit);
                    } else {
                        state.project_ground(qubit);
                    }
                    state.renormalize();
                } else if r < p_reset + p_z {
                    state.flip_phase(qubit);
                }
            }
            ChannelImpl::General => {
                let gamma = 1.0 - e1;
                let p_jump = gamma * state.excited_population(qubit);
                if rng.gen::<f64>() < p_jump {
                    state.decay(qubit);
                } else {
                    state.scale_excited(qubit, libm::sqrt(e1));
                }
                state.renormalize();
                // amplitude damping already leaves sqrt(e1) of the coherence
                let remaining = (e2 / libm::sqrt(e1)).min(1.0);
                let p_z = (1.0 - remaining) / 2.0;
                if rng.gen::<f64>() < p_z {
                    state.flip_phase(qubit);
                }
            }
        }
        Ok(())
    }
}

/// Duration of a gate in nanoseconds.
///
/// H and U2 use the U2 class; U3, RY, X and Z the U3 class; CX and CZ the
/// CX class. CCX is timed as the critical path of the standard six-CNOT
/// Toffoli network (T gates in the U3 class). Every other gate is timed as
/// the critical path of its [`decompose_mc`] lowering.
pub fn gate_duration_ns(gate: &Gate, d: &GateDurations) -> f64 {
    match gate.kind() {
        GateKind::H | GateKind::U2 => d.u2,
        GateKind::U3 | GateKind::Ry | GateKind::X | GateKind::Z => d.u3,
        GateKind::Cx | GateKind::Cz => d.cx,
        GateKind::Ccx => toffoli_network_ns(d),
        GateKind::Mcx | GateKind::Mcz | GateKind::Cry | GateKind::Ccry => {
            let width = gate.qubits().iter().max().map_or(0, |m| m + 1);
            let mut c = Circuit::with_register("q", width);
            c.push(gate.clone());
            decompose_mc(&c).schedule(|g| gate_duration_ns(g, d)).makespan
        }
    }
}

fn toffoli_network_ns(d: &GateDurations) -> f64 {
    use core::f64::consts::FRAC_PI_4;
    let t = |q| Gate::u3(0.0, 0.0, FRAC_PI_4, q);
    let tdg = |q| Gate::u3(0.0, 0.0, -FRAC_PI_4, q);
    let (a, b, x) = (0, 1, 2);
    let mut c = Circuit::with_register("q", 3);
    c.push(Gate::h(x))
        .push(Gate::cx(b, x))
        .push(tdg(x))
        .push(Gate::cx(a, x))
        .push(t(x))
        .push(Gate::cx(b, x))
        .push(tdg(x))
        .push(Gate::cx(a, x))
        .push(t(b))
        .push(t(x))
        .push(Gate::h(x))
        .push(Gate::cx(a, b))
        .push(t(a))
        .push(tdg(b))
        .push(Gate::cx(a, b));
    c.schedule(|g| gate_duration_ns(g, d)).makespan
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn profile(t1: f64, t2: f64) -> NoiseProfile {
        NoiseProfile::new("test", t1, t2).unwrap()
    }

    #[test]
    fn validation() {
        assert!(NoiseProfile::new("x", 0.0, 1.0).is_err());
        assert!(NoiseProfile::new("x", 10.0, 21.0).is_err());
        assert!(NoiseProfile::new("x", 10.0, 20.0).is_ok());
        let mut p = profile(10.0, 10.0);
        p.gate_ns.cx = 0.0;
        assert_eq!(p.validate(), Err(NoiseError::BadDuration));
    }

    #[test]
    fn zero_time_is_identity() {
        let ch = relaxation_channel(0.0, &profile(50.0, 60.0));
        assert!(ch.is_identity());
    }

    #[test]
    fn excited_state_after_t1() {
        let p = profile(50.0, 60.0);
        let ch = relaxation_channel(50_000.0, &p);
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let rho = ch.apply_to_density([[zero, zero], [zero, one]]);
        assert!((rho[1][1].re - (-1.0f64).exp()).abs() < 1e-12);
        assert!((rho[1][1].re - 0.36788).abs() < 1e-5);
    }

    #[test]
    fn plus_state_after_t2() {
        let p = profile(50.0, 60.0);
        let ch = relaxation_channel(60_000.0, &p);
        let h = Complex64::new(0.5, 0.0);
        let rho = ch.apply_to_density([[h, h], [h, h]]);
        assert!((rho[0][1].norm() - 0.5 * (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn mixture_refuses_t2_above_t1() {
        let p = profile(50.0, 90.0);
        let ch = relaxation_channel(1000.0, &p);
        let mut s = StateVector::new(1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            ch.apply_trajectory(&mut s, 0, ChannelImpl::Mixture, &mut rng),
            Err(NoiseError::MixtureNeedsT2BelowT1)
        );
        assert_eq!(p.preferred_impl(), ChannelImpl::General);
        assert_eq!(profile(81.0, 39.0).preferred_impl(), ChannelImpl::Mixture);
    }

    #[test]
    fn durations_by_class() {
        let d = GateDurations::default();
        assert_eq!(gate_duration_ns(&Gate::h(0), &d), 50.0);
        assert_eq!(gate_duration_ns(&Gate::x(0), &d), 100.0);
        assert_eq!(gate_duration_ns(&Gate::cz(0, 1), &d), 300.0);
        // H + 4 CX + 3 single-qubit on the target, then the final CX-T-CX on the controls
        assert_eq!(gate_duration_ns(&Gate::ccx(0, 1, 2), &d), 2250.0);
        let ccry = gate_duration_ns(&Gate::ccry(0.3, 0, 1, 2), &d);
        assert_eq!(ccry, 2.0 * 100.0 + 2.0 * 2250.0);
        let mcz = gate_duration_ns(&Gate::mcz(&[0, 1, 2, 3]), &d);
        assert_eq!(mcz, 4.0 * 2250.0 + 300.0);
    }
}
