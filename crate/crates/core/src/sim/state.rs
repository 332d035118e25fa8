use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, GateKind};

type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense pure state over `n_qubits`; bit `i` of an index is qubit `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>`.
    pub fn new(n_qubits: usize) -> Self {
        Self::basis(n_qubits, 0)
    }

    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amps = alloc::vec![ZERO; 1 << n_qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { n_qubits, amps }
    }

    /// Wraps raw amplitudes; `None` unless the length is a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Option<Self> {
        if !amps.len().is_power_of_two() {
            return None;
        }
        let n_qubits = amps.len().trailing_zeros() as usize;
        Some(Self { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Outcome distribution of measuring `qubits`; bit `b` of an outcome
    /// index is the value of `qubits[b]`.
    pub fn marginal(&self, qubits: &[usize]) -> Vec<f64> {
        let mut out = alloc::vec![0.0; 1 << qubits.len()];
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            out[gather_bits(i, qubits)] += p;
        }
        out
    }

    /// Probability mass on basis states where every qubit outside `qubits`
    /// is zero.
    pub fn mass_with_others_clear(&self, qubits: &[usize]) -> f64 {
        let keep = qubits.iter().fold(0usize, |m, &q| m | (1 << q));
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & !keep == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn apply_gate(&mut self, gate: &Gate) {
        let q = gate.qubits();
        let [a, b, c] = gate.raw_params();
        match gate.kind() {
            GateKind::X | GateKind::Cx | GateKind::Ccx | GateKind::Mcx => {
                self.controlled_x(mask(gate.controls()), gate.target())
            }
            GateKind::Z | GateKind::Cz | GateKind::Mcz => self.phase_flip(mask(q)),
            GateKind::H => self.controlled_unitary(0, q[0], &hadamard()),
            GateKind::Ry | GateKind::Cry | GateKind::Ccry => {
                self.controlled_unitary(mask(gate.controls()), gate.target(), &ry(a))
            }
            GateKind::U3 => self.controlled_unitary(0, q[0], &u3(a, b, c)),
            GateKind::U2 => self.controlled_unitary(0, q[0], &u3(core::f64::consts::FRAC_PI_2, a, b)),
        }
    }

    /// Applies every gate of `circuit`.
    ///
    /// Panics if the circuit is wider than the state.
    pub fn apply_circuit(&mut self, circuit: &Circuit) {
        assert!(
            circuit.n_qubits() <= self.n_qubits,
            "circuit of width {} on a {}-qubit state",
            circuit.n_qubits(),
            self.n_qubits
        );
        for g in circuit.ops() {
            self.apply_gate(g);
        }
    }

    fn controlled_x(&mut self, ctrl: usize, target: usize) {
        let t = 1 << target;
        for i in 0..self.amps.len() {
            if i & t == 0 && i & ctrl == ctrl {
                self.amps.swap(i, i | t);
            }
        }
    }

    fn phase_flip(&mut self, on: usize) {
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & on == on {
                *a = -*a;
            }
        }
    }

    fn controlled_unitary(&mut self, ctrl: usize, target: usize, m: &Matrix2) {
        let t = 1 << target;
        for i in 0..self.amps.len() {
            if i & t == 0 && i & ctrl == ctrl {
                let (a0, a1) = (self.amps[i], self.amps[i | t]);
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | t] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    /// Probability that `qubit` reads 1.
    pub(crate) fn excited_population(&self, qubit: usize) -> f64 {
        let t = 1 << qubit;
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & t != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    pub(crate) fn scale_excited(&mut self, qubit: usize, factor: f64) {
        let t = 1 << qubit;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & t != 0 {
                *a *= factor;
            }
        }
    }

    /// Moves the `qubit = 1` branch onto `qubit = 0`, discarding the old
    /// `qubit = 0` branch (the jump of amplitude damping, unnormalized).
    pub(crate) fn decay(&mut self, qubit: usize) {
        let t = 1 << qubit;
        for i in 0..self.amps.len() {
            if i & t == 0 {
                self.amps[i] = self.amps[i | t];
                self.amps[i | t] = ZERO;
            }
        }
    }

    /// Zeroes the `qubit = 1` branch.
    pub(crate) fn project_ground(&mut self, qubit: usize) {
        self.scale_excited(qubit, 0.0);
    }

    pub(crate) fn flip_phase(&mut self, qubit: usize) {
        self.phase_flip(1 << qubit);
    }

    pub(crate) fn renormalize(&mut self) {
        let norm = libm::sqrt(self.norm_sqr());
        if norm > 0.0 {
            let inv = 1.0 / norm;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }
}

fn mask(qubits: &[usize]) -> usize {
    qubits.iter().fold(0, |m, &q| m | (1 << q))
}

pub(crate) fn gather_bits(index: usize, qubits: &[usize]) -> usize {
    qubits
        .iter()
        .enumerate()
        .fold(0, |acc, (b, &q)| acc | (((index >> q) & 1) << b))
}

fn hadamard() -> Matrix2 {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    [[h, h], [h, -h]]
}

fn ry(theta: f64) -> Matrix2 {
    let (s, c) = (libm::sin(theta / 2.0), libm::cos(theta / 2.0));
    [
        [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ]
}

fn u3(theta: f64, phi: f64, lambda: f64) -> Matrix2 {
    let (s, c) = (libm::sin(theta / 2.0), libm::cos(theta / 2.0));
    [
        [Complex64::new(c, 0.0), -Complex64::from_polar(s, lambda)],
        [Complex64::from_polar(s, phi), Complex64::from_polar(c, phi + lambda)],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;

    fn run(n: usize, gates: &[Gate]) -> StateVector {
        let mut s = StateVector::new(n);
        for g in gates {
            s.apply_gate(g);
        }
        s
    }

    #[test]
    fn x_flips() {
        let s = run(1, &[Gate::x(0)]);
        assert_eq!(s.amplitude(1), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn hh_is_identity() {
        let s = run(1, &[Gate::h(0), Gate::h(0)]);
        assert!((s.amplitude(0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(s.amplitude(1).norm() < 1e-12);
    }

    #[test]
    fn toffoli_truth_table() {
        // |110> in display order: qubits 1 and 2 set, target qubit 0
        let mut s = StateVector::basis(3, 0b110);
        s.apply_gate(&Gate::ccx(1, 2, 0));
        assert_eq!(s.amplitude(0b111), Complex64::new(1.0, 0.0));
        for input in 0..8usize {
            let mut s = StateVector::basis(3, input);
            s.apply_gate(&Gate::ccx(0, 1, 2));
            let expected = if input & 0b011 == 0b011 { input ^ 0b100 } else { input };
            assert_eq!(s.amplitude(expected), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn mcz_flips_only_all_ones() {
        let mut s = StateVector::new(3);
        for q in 0..3 {
            s.apply_gate(&Gate::h(q));
        }
        s.apply_gate(&Gate::mcz(&[0, 1, 2]));
        for i in 0..8 {
            let sign = if i == 7 { -1.0 } else { 1.0 };
            assert!((s.amplitude(i).re - sign / libm::sqrt(8.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn u2_is_u3_at_half_pi_and_inverse_holds() {
        let mut a = StateVector::new(1);
        a.apply_gate(&Gate::u2(0.4, -1.3, 0));
        let mut b = StateVector::new(1);
        b.apply_gate(&Gate::u3(core::f64::consts::FRAC_PI_2, 0.4, -1.3, 0));
        assert!((a.inner(&b).norm() - 1.0).abs() < 1e-12);
        for g in [Gate::u2(0.4, -1.3, 0), Gate::u3(0.3, 1.2, -0.7, 0), Gate::ry(1.1, 0)] {
            let mut s = StateVector::new(1);
            s.apply_gate(&Gate::h(0));
            s.apply_gate(&Gate::u3(0.2, 0.3, 0.0, 0));
            let before = s.clone();
            s.apply_gate(&g);
            s.apply_gate(&g.inverse());
            // exact inverse, including global phase
            assert!((before.inner(&s) - Complex64::new(1.0, 0.0)).norm() < 1e-12, "{g}");
        }
    }

    #[test]
    fn controlled_rotations_respect_controls() {
        let theta = 0.9;
        for input in 0..8usize {
            let mut s = StateVector::basis(3, input);
            s.apply_gate(&Gate::ccry(theta, 0, 1, 2));
            if input & 0b011 == 0b011 {
                let t = input & 0b100;
                let p1 = s.marginal(&[2])[1];
                let expected = if t == 0 {
                    libm::sin(theta / 2.0).powi(2)
                } else {
                    libm::cos(theta / 2.0).powi(2)
                };
                assert!((p1 - expected).abs() < 1e-12);
            } else {
                assert_eq!(s.amplitude(input), Complex64::new(1.0, 0.0));
            }
        }
    }

    #[test]
    fn marginal_orders_bits_by_list() {
        let s = StateVector::basis(3, 0b100);
        assert_eq!(s.marginal(&[2, 0]), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(s.marginal(&[0, 2]), [0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn norm_is_preserved() {
        let mut c = Circuit::with_register("q", 4);
        c.push(Gate::h(0))
            .push(Gate::u3(0.3, 0.2, 0.1, 1))
            .push(Gate::cry(1.2, 0, 2))
            .push(Gate::mcx(&[0, 1, 2], 3))
            .push(Gate::u2(0.5, 0.6, 3))
            .push(Gate::mcz(&[0, 1, 2, 3]));
        let mut s = StateVector::new(4);
        for g in c.ops() {
            s.apply_gate(g);
            assert!((s.norm_sqr() - 1.0).abs() < 1e-9);
        }
    }
}
