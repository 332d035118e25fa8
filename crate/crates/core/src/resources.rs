//! Resource reports, quantum-volume requirements and roadmap years.
//!
//! Required quantum volume is approximated as `2^min(depth, width)` of the
//! lowered circuit. Years extrapolate a roadmap that reached QV 32 in 2020
//! and doubles every year.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::{decompose_mc, Circuit, GateKind, Metrics};
use crate::graph::Graph;
use crate::grover::GroverCircuit;

/// Roadmap anchor: QV 2^5 = 32 reached in this year.
pub const ROADMAP_BASE_YEAR: i64 = 2020;
pub const ROADMAP_BASE_LOG2: u32 = 5;

/// A power-of-two quantum volume, stored by exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct QuantumVolume {
    pub log2: u32,
}

impl QuantumVolume {
    /// `None` when `value` is not a power of two.
    pub fn from_value(value: u128) -> Option<Self> {
        value.is_power_of_two().then(|| Self {
            log2: value.trailing_zeros(),
        })
    }

    /// The volume itself; `None` past `2^127`.
    pub fn value(self) -> Option<u128> {
        1u128.checked_shl(self.log2)
    }
}

impl fmt::Display for QuantumVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "2^{}", self.log2),
        }
    }
}

/// `2^min(depth, n_qubits)`.
pub fn required_qv(depth: usize, n_qubits: usize) -> QuantumVolume {
    QuantumVolume {
        log2: depth.min(n_qubits).min(u32::MAX as usize) as u32,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct YearEstimate {
    pub year: i64,
    /// Set when the volume is below the roadmap anchor and the year was
    /// clamped to it.
    pub clamped: bool,
}

/// Year in which the doubling roadmap reaches `qv`.
pub fn year_estimate(qv: QuantumVolume) -> YearEstimate {
    if qv.log2 < ROADMAP_BASE_LOG2 {
        return YearEstimate {
            year: ROADMAP_BASE_YEAR,
            clamped: true,
        };
    }
    YearEstimate {
        year: ROADMAP_BASE_YEAR + i64::from(qv.log2 - ROADMAP_BASE_LOG2),
        clamped: false,
    }
}

/// Gate counts in the categories hardware cares about most.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GateCategories {
    pub not: usize,
    pub cnot: usize,
    pub ccnot: usize,
    /// Everything else: single-qubit unitaries, CZ and any multi-controlled
    /// gates left in a raw circuit.
    pub other: usize,
}

impl GateCategories {
    pub fn from_metrics(m: &Metrics) -> Self {
        let not = m.count(GateKind::X);
        let cnot = m.count(GateKind::Cx);
        let ccnot = m.count(GateKind::Ccx);
        Self {
            not,
            cnot,
            ccnot,
            other: m.size - not - cnot - ccnot,
        }
    }

    pub fn total(&self) -> usize {
        self.not + self.cnot + self.ccnot + self.other
    }
}

/// What a report describes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConfigDescriptor {
    pub prep: String,
    pub oracle: String,
    pub nodes: usize,
    pub edges: usize,
    pub k: usize,
    pub iterations: u64,
}

impl ConfigDescriptor {
    pub fn for_grover(gc: &GroverCircuit, g: &Graph) -> Self {
        Self {
            prep: gc.plan.prep.label().into(),
            oracle: gc.plan.oracle.style.label().into(),
            nodes: g.node_count(),
            edges: g.edge_count(),
            k: gc.plan.k,
            iterations: gc.plan.iterations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ResourceReport {
    pub config: ConfigDescriptor,
    pub size: usize,
    pub depth: usize,
    pub n_qubits: usize,
    /// Per-kind counts before lowering, keyed by gate name.
    pub raw_counts: BTreeMap<String, usize>,
    pub decomposed_size: usize,
    pub decomposed_depth: usize,
    pub decomposed_n_qubits: usize,
    /// Categories of the lowered circuit.
    pub counts: GateCategories,
    pub required_qv: QuantumVolume,
    pub year_estimate: YearEstimate,
}

/// Metrics before and after [`decompose_mc`], plus the QV requirement of
/// the lowered circuit.
pub fn report(circuit: &Circuit, config: ConfigDescriptor) -> ResourceReport {
    let raw = circuit.metrics();
    let lowered = decompose_mc(circuit).metrics();
    let qv = if lowered.size == 0 {
        QuantumVolume { log2: 0 }
    } else {
        required_qv(lowered.depth, lowered.n_qubits)
    };
    ResourceReport {
        config,
        size: raw.size,
        depth: raw.depth,
        n_qubits: raw.n_qubits,
        raw_counts: raw.counts.iter().map(|(k, &c)| (k.name().into(), c)).collect(),
        decomposed_size: lowered.size,
        decomposed_depth: lowered.depth,
        decomposed_n_qubits: lowered.n_qubits,
        counts: GateCategories::from_metrics(&lowered),
        required_qv: qv,
        year_estimate: year_estimate(qv),
    }
}

/// Least-squares line with its coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Fits `y = slope * x + intercept`; `None` for fewer than two distinct xs.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Option<LinearFit> {
    let n = xs.len().min(ys.len());
    if n < 2 {
        return None;
    }
    let mean = |v: &[f64]| v[..n].iter().sum::<f64>() / n as f64;
    let (mx, my) = (mean(xs), mean(ys));
    let sxx: f64 = xs[..n].iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs[..n].iter().zip(&ys[..n]).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys[..n].iter().map(|y| (y - my) * (y - my)).sum();
    let ss_res: f64 = xs[..n]
        .iter()
        .zip(&ys[..n])
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Some(LinearFit {
        slope,
        intercept,
        r_squared,
    })
}

/// Row labels used when printing reports as a table.
pub const TABLE_ROWS: [&str; 7] = ["Size", "Depth", "# of Qubits", "NOT", "CNOT", "CCNOT", "Other"];

impl ResourceReport {
    /// Values in [`TABLE_ROWS`] order, taken from the lowered circuit.
    pub fn table_values(&self) -> Vec<usize> {
        alloc::vec![
            self.decomposed_size,
            self.decomposed_depth,
            self.decomposed_n_qubits,
            self.counts.not,
            self.counts.cnot,
            self.counts.ccnot,
            self.counts.other,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use proptest::prelude::*;

    #[test]
    fn qv_examples() {
        assert_eq!(required_qv(79, 9).value(), Some(512));
        assert_eq!(required_qv(1, 1).value(), Some(2));
        assert_eq!(required_qv(3, 10).value(), Some(8));
        assert_eq!(required_qv(200, 300).value(), None);
    }

    #[test]
    fn years() {
        let y = |v| year_estimate(QuantumVolume::from_value(v).unwrap());
        assert_eq!(
            y(512),
            YearEstimate {
                year: 2024,
                clamped: false
            }
        );
        assert_eq!(
            y(32),
            YearEstimate {
                year: 2020,
                clamped: false
            }
        );
        assert_eq!(y(1024).year, 2025);
        assert_eq!(
            y(8),
            YearEstimate {
                year: 2020,
                clamped: true
            }
        );
        assert_eq!(QuantumVolume::from_value(24), None);
    }

    #[test]
    fn empty_report() {
        let r = report(&Circuit::new(), ConfigDescriptor::default());
        assert_eq!((r.size, r.depth, r.n_qubits, r.decomposed_size), (0, 0, 0, 0));
        assert_eq!(r.counts, GateCategories::default());
    }

    #[test]
    fn categories_sum_to_size() {
        let mut c = Circuit::with_register("q", 5);
        c.push(Gate::h(0))
            .push(Gate::x(1))
            .push(Gate::mcx(&[0, 1, 2, 3], 4))
            .push(Gate::cry(0.2, 0, 1));
        let r = report(&c, ConfigDescriptor::default());
        assert_eq!(r.counts.total(), r.decomposed_size);
        assert_eq!(r.counts.ccnot, 5);
    }

    #[test]
    fn fit_recovers_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        let f = linear_fit(&xs, &ys).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert!(linear_fit(&[1.0, 1.0], &[2.0, 3.0]).is_none());
    }

    proptest! {
        #[test]
        fn qv_monotone(d in 1usize..60, n in 1usize..60, dd in 0usize..5, dn in 0usize..5) {
            prop_assert!(required_qv(d, n) <= required_qv(d + dd, n));
            prop_assert!(required_qv(d, n) <= required_qv(d, n + dn));
            prop_assert!(required_qv(d, n).value().unwrap().is_power_of_two());
        }
    }
}
