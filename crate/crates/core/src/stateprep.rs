//! Initial-state circuits: full superposition, W, complemented W and Dicke.
//!
//! Every circuit acts on a single `nodes` register starting from `|0...0>`
//! and produces real, positive, uniform amplitudes on its support.
//!
//! W states are built as a balanced binary tree of two-qubit splitting
//! blocks (`RY, CX, RY, CX`), so `n - 1` blocks in depth `O(log n)`.
//!
//! Dicke states use the split-and-cyclic-shift construction: `k` X gates
//! followed by one SCS unitary per prefix length `l = n..2`, each made of a
//! CX-CRY-CX block and up to `k - 1` CX-CCRY-CX blocks. The raw gate count
//! is at most `k + 3k(n - 1)`, below [`DICKE_GATE_CONSTANT`]` * k * n`;
//! lowered with [`crate::circuit::decompose_mc`] it is at most
//! `k + 6k(n - 1)`.

use crate::circuit::{Circuit, Gate};
use crate::math::binomial;

/// Raw Dicke circuits satisfy `size <= DICKE_GATE_CONSTANT * k * n`.
pub const DICKE_GATE_CONSTANT: usize = 4;

pub const NODE_REGISTER: &str = "nodes";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrepError {
    #[error("state preparation needs at least one qubit")]
    NoQubits,
    #[error("Dicke weight {k} must lie in 1..={max} for {n} qubits")]
    DickeWeightOutOfRange { n: usize, k: usize, max: usize },
    #[error("W-complement preparation only searches k = n - 1 (n = {n}, k = {k})")]
    WComplementNeedsKNMinusOne { n: usize, k: usize },
    #[error("Dicke({prep}) preparation cannot search for {k}-cliques")]
    WeightMismatch { prep: usize, k: usize },
}

/// Which initial state the search starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum PrepMode {
    /// Uniform superposition over all `2^n` subsets.
    Full,
    /// W state followed by X on every qubit: weight `n - 1`.
    WComplement,
    /// Uniform superposition over weight-`k` subsets.
    Dicke(usize),
}

impl PrepMode {
    /// Checks the mode against a search for `k`-subsets of `n` nodes.
    pub fn validate(self, n: usize, k: usize) -> Result<(), PrepError> {
        if n == 0 {
            return Err(PrepError::NoQubits);
        }
        match self {
            PrepMode::Full => Ok(()),
            PrepMode::WComplement if k + 1 != n => Err(PrepError::WComplementNeedsKNMinusOne { n, k }),
            PrepMode::WComplement => Ok(()),
            PrepMode::Dicke(w) if w != k => Err(PrepError::WeightMismatch { prep: w, k }),
            PrepMode::Dicke(w) => check_dicke(n, w),
        }
    }

    /// Whether the prepared support already fixes the Hamming weight.
    pub fn restricts_weight(self) -> bool {
        !matches!(self, PrepMode::Full)
    }

    /// Number of basis states in the prepared support: `2^n` or `C(n, k)`.
    pub fn search_space_size(self, n: usize) -> u128 {
        match self {
            PrepMode::Full => 1u128 << n,
            PrepMode::WComplement => n as u128,
            PrepMode::Dicke(k) => binomial(n as u64, k as u64),
        }
    }

    pub fn circuit(self, n: usize) -> Result<Circuit, PrepError> {
        match self {
            PrepMode::Full => full_superposition(n),
            PrepMode::WComplement => w_complement(n),
            PrepMode::Dicke(k) => dicke_prep(n, k),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PrepMode::Full => "full",
            PrepMode::WComplement => "w",
            PrepMode::Dicke(_) => "dicke",
        }
    }
}

fn check_dicke(n: usize, k: usize) -> Result<(), PrepError> {
    if n < 2 || k == 0 || k >= n {
        return Err(PrepError::DickeWeightOutOfRange {
            n,
            k,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

fn node_circuit(n: usize) -> Result<Circuit, PrepError> {
    if n == 0 {
        return Err(PrepError::NoQubits);
    }
    Ok(Circuit::with_register(NODE_REGISTER, n))
}

/// `n` Hadamards.
pub fn full_superposition(n: usize) -> Result<Circuit, PrepError> {
    let mut c = node_circuit(n)?;
    for q in 0..n {
        c.push(Gate::h(q));
    }
    Ok(c)
}

/// `(|10..0> + ... + |0..01>) / sqrt(n)`.
pub fn w_state(n: usize) -> Result<Circuit, PrepError> {
    let mut c = node_circuit(n)?;
    c.push(Gate::x(0));
    split_excitation(&mut c, 0, n);
    Ok(c)
}

/// Spreads a single excitation sitting on `start` uniformly over
/// `start..start + len`.
fn split_excitation(c: &mut Circuit, start: usize, len: usize) {
    if len < 2 {
        return;
    }
    let left = len.div_ceil(2);
    let (a, b) = (start, start + left);
    // leaves amplitude sin(alpha) = sqrt(left/len) on `a`
    let alpha = libm::asin(libm::sqrt(left as f64 / len as f64));
    c.push(Gate::ry(alpha, b))
        .push(Gate::cx(a, b))
        .push(Gate::ry(-alpha, b))
        .push(Gate::cx(b, a));
    split_excitation(c, a, left);
    split_excitation(c, b, len - left);
}

/// W state followed by X on every qubit: uniform over weight `n - 1`.
pub fn w_complement(n: usize) -> Result<Circuit, PrepError> {
    let mut c = w_state(n)?;
    for q in 0..n {
        c.push(Gate::x(q));
    }
    Ok(c)
}

/// Dicke state `|D^n_k>`, `1 <= k <= n - 1`.
pub fn dicke_prep(n: usize, k: usize) -> Result<Circuit, PrepError> {
    check_dicke(n, k)?;
    let mut c = node_circuit(n)?;
    // position p (1-based, as in the SCS recursion) lives on qubit p - 1
    let q = |p: usize| p - 1;
    for p in n - k + 1..=n {
        c.push(Gate::x(q(p)));
    }
    for l in (2..=n).rev() {
        let width = k.min(l - 1);
        c.push(Gate::cx(q(l - 1), q(l)))
            .push(Gate::cry(scs_angle(1, l), q(l), q(l - 1)))
            .push(Gate::cx(q(l - 1), q(l)));
        for i in 2..=width {
            c.push(Gate::cx(q(l - i), q(l)))
                .push(Gate::ccry(scs_angle(i, l), q(l), q(l - i + 1), q(l - i)))
                .push(Gate::cx(q(l - i), q(l)));
        }
    }
    Ok(c)
}

fn scs_angle(i: usize, l: usize) -> f64 {
    2.0 * libm::acos(libm::sqrt(i as f64 / l as f64))
}
