//! Phase oracles marking the `k`-cliques of a graph.
//!
//! Both styles count the edges induced by the selected node set into a
//! binary counter and compare it with `C(k, 2)`:
//!
//! - **Checking**: every edge `(u, v)` adds one to the counter through a
//!   ladder of multi-controlled X gates controlled on `u` and `v`.
//! - **Incremental**: every edge first sets a one-qubit `edge_flag` with a
//!   CCX, the flag drives a controlled increment, and the CCX is repeated to
//!   clear the flag.
//!
//! When the search runs over the full Hilbert space the node count is
//! compared with `k` as well and the two results are combined with a CCX.
//! The clique flag then receives a Z and the whole computation is mirrored,
//! so every work qubit returns to `|0>`.
//!
//! Edges are visited in lexicographic `(u, v)` order.

use alloc::vec::Vec;
use core::ops::Range;

use crate::circuit::{Circuit, Gate};
use crate::graph::Graph;
use crate::math::{binomial, bits_to_hold};
use crate::stateprep::NODE_REGISTER;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("clique size must be at least 2, got {0}")]
    CliqueTooSmall(usize),
    #[error("clique size {k} exceeds node count {n}")]
    CliqueTooLarge { k: usize, n: usize },
    #[error("oracle requires at least one edge")]
    NoEdges,
    #[error("target count {value} does not fit a {width}-bit counter")]
    CounterCapacity { value: u128, width: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum OracleStyle {
    Checking,
    Incremental,
}

impl OracleStyle {
    pub fn label(self) -> &'static str {
        match self {
            OracleStyle::Checking => "checking",
            OracleStyle::Incremental => "incremental",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OracleMode {
    pub style: OracleStyle,
    /// Also require exactly `k` selected nodes. Needed whenever the
    /// prepared state is not restricted to Hamming weight `k`.
    pub count_nodes: bool,
}

/// Where each piece of oracle state lives.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CounterLayout {
    pub nodes: Range<usize>,
    /// Holds the number of induced edges; `bits_to_hold(C(k, 2))` wide.
    pub edge_counter: Range<usize>,
    /// Checking style: set when the edge count equals `C(k, 2)`.
    /// Incremental style: per-edge scratch flag.
    pub edge_flag: usize,
    /// Incremental style only: set when the edge count equals `C(k, 2)`.
    pub edge_check: Option<usize>,
    /// Holds the number of selected nodes. Wide enough for any count up to
    /// `n`, so it never wraps onto `k`.
    pub node_counter: Option<Range<usize>>,
    pub node_flag: Option<usize>,
    /// The qubit receiving the Z. Aliases the edge result when nodes are
    /// not counted.
    pub clique_flag: usize,
    /// Clean ancillas [`crate::circuit::decompose_mc`] adds when lowering.
    pub ancilla_width: usize,
    /// Width before lowering.
    pub n_qubits: usize,
}

impl CounterLayout {
    pub fn edge_counter_width(&self) -> usize {
        self.edge_counter.len()
    }

    pub fn node_counter_width(&self) -> usize {
        self.node_counter.as_ref().map_or(0, |r| r.len())
    }

    /// All qubits other than the node register.
    pub fn work_qubits(&self) -> Range<usize> {
        self.nodes.end..self.n_qubits
    }
}

/// A built oracle together with its layout.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub circuit: Circuit,
    pub layout: CounterLayout,
    /// Gate index range of each per-edge group in the compute half.
    pub edge_groups: Vec<Range<usize>>,
}

/// `|x> -> |x + 1 mod 2^width>` on a `counter` register.
pub fn increment_circuit(width: usize) -> Circuit {
    let mut c = Circuit::with_register("counter", width);
    let bits: Vec<usize> = (0..width).collect();
    push_controlled_increment(&mut c, &[], &bits);
    c
}

/// Adds one to `counter` (bit 0 least significant) when every qubit in
/// `controls` is set: MCX onto the top bit first, X-like gate on bit 0 last.
fn push_controlled_increment(c: &mut Circuit, controls: &[usize], counter: &[usize]) {
    for j in (0..counter.len()).rev() {
        let mut ctrl = controls.to_vec();
        ctrl.extend_from_slice(&counter[..j]);
        c.push(Gate::mcx(&ctrl, counter[j]));
    }
}

/// Sets `flag` iff `counter` holds `value`.
fn push_equality(c: &mut Circuit, counter: &[usize], value: u128, flag: usize) -> Result<(), OracleError> {
    if counter.len() < 128 && value >> counter.len() != 0 {
        return Err(OracleError::CounterCapacity {
            value,
            width: counter.len(),
        });
    }
    let zeros: Vec<usize> = counter
        .iter()
        .enumerate()
        .filter(|(b, _)| (value >> b) & 1 == 0)
        .map(|(_, &q)| q)
        .collect();
    for &q in &zeros {
        c.push(Gate::x(q));
    }
    c.push(Gate::mcx(counter, flag));
    for &q in &zeros {
        c.push(Gate::x(q));
    }
    Ok(())
}

/// Builds the phase oracle flipping exactly the `k`-cliques of `g`.
pub fn build_oracle(g: &Graph, k: usize, mode: OracleMode) -> Result<Oracle, OracleError> {
    let n = g.node_count();
    if k < 2 {
        return Err(OracleError::CliqueTooSmall(k));
    }
    if k > n {
        return Err(OracleError::CliqueTooLarge { k, n });
    }
    if g.edge_count() == 0 {
        return Err(OracleError::NoEdges);
    }
    let target_edges = binomial(k as u64, 2);

    let mut c = Circuit::new();
    let nodes = c.add_register(NODE_REGISTER, n);
    let edge_counter = c.add_register("edge_counter", bits_to_hold(target_edges));
    let edge_flag = c.add_register("edge_flag", 1).start;
    let edge_check = match mode.style {
        OracleStyle::Checking => None,
        OracleStyle::Incremental => Some(c.add_register("edge_check", 1).start),
    };
    let (node_counter, node_flag) = if mode.count_nodes {
        let counter = c.add_register("node_counter", bits_to_hold(n as u128));
        let flag = c.add_register("node_flag", 1).start;
        (Some(counter), Some(flag))
    } else {
        (None, None)
    };
    let edge_result = edge_check.unwrap_or(edge_flag);
    let clique_flag = if mode.count_nodes {
        c.add_register("clique_flag", 1).start
    } else {
        edge_result
    };

    let counter_bits: Vec<usize> = edge_counter.clone().collect();
    let mut edge_groups = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let begin = c.len();
        match mode.style {
            OracleStyle::Checking => push_controlled_increment(&mut c, &[u, v], &counter_bits),
            OracleStyle::Incremental => {
                c.push(Gate::ccx(u, v, edge_flag));
                push_controlled_increment(&mut c, &[edge_flag], &counter_bits);
                c.push(Gate::ccx(u, v, edge_flag));
            }
        }
        edge_groups.push(begin..c.len());
    }
    push_equality(&mut c, &counter_bits, target_edges, edge_result)?;

    if let (Some(counter), Some(flag)) = (&node_counter, node_flag) {
        let bits: Vec<usize> = counter.clone().collect();
        for u in nodes.clone() {
            push_controlled_increment(&mut c, &[u], &bits);
        }
        push_equality(&mut c, &bits, k as u128, flag)?;
        c.push(Gate::ccx(edge_result, flag, clique_flag));
    }

    let compute = c.clone();
    c.push(Gate::z(clique_flag));
    for gate in compute.adjoint().ops() {
        c.push(gate.clone());
    }

    let ancilla_width = c.ops().iter().map(crate::circuit::ancillas_needed).max().unwrap_or(0);
    let layout = CounterLayout {
        nodes,
        edge_counter,
        edge_flag,
        edge_check,
        node_counter,
        node_flag,
        clique_flag,
        ancilla_width,
        n_qubits: c.n_qubits(),
    };
    Ok(Oracle {
        circuit: c,
        layout,
        edge_groups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_cliques_bruteforce, fixtures, subset_to_bitstring};
    use crate::sim::StateVector;
    use num_complex::Complex64;

    fn apply(c: &Circuit, input: usize) -> StateVector {
        let mut s = StateVector::basis(c.n_qubits(), input);
        s.apply_circuit(c);
        s
    }

    #[test]
    fn increment_two_bits() {
        let inc = increment_circuit(2);
        assert_eq!(apply(&inc, 0b10).amplitude(0b11), Complex64::new(1.0, 0.0));
        let mut s = StateVector::new(2);
        for _ in 0..3 {
            s.apply_circuit(&inc);
        }
        assert_eq!(s.amplitude(0b11), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn increment_wraps() {
        assert_eq!(
            apply(&increment_circuit(3), 0b111).amplitude(0),
            Complex64::new(1.0, 0.0)
        );
        for w in 1..6 {
            let inc = increment_circuit(w);
            for x in 0..1usize << w {
                let y = (x + 1) % (1 << w);
                assert_eq!(apply(&inc, x).amplitude(y), Complex64::new(1.0, 0.0));
            }
        }
    }

    #[test]
    fn layout_widths() {
        let g = fixtures::g6();
        let checking = build_oracle(
            &g,
            4,
            OracleMode {
                style: OracleStyle::Checking,
                count_nodes: true,
            },
        )
        .unwrap();
        assert_eq!(checking.layout.edge_counter_width(), 3);
        assert_eq!(checking.layout.node_counter_width(), 3);
        assert_eq!(checking.edge_groups.len(), 10);
        assert!(checking.edge_groups.iter().all(|r| r.len() == 3));

        let g4 = fixtures::g4();
        let w = build_oracle(
            &g4,
            3,
            OracleMode {
                style: OracleStyle::Checking,
                count_nodes: false,
            },
        )
        .unwrap();
        assert_eq!(w.layout.edge_counter_width(), 2);
        assert_eq!(w.layout.clique_flag, w.layout.edge_flag);
        assert_eq!(w.layout.n_qubits, 7);
        let inc = build_oracle(
            &g4,
            3,
            OracleMode {
                style: OracleStyle::Incremental,
                count_nodes: false,
            },
        )
        .unwrap();
        assert_eq!(inc.layout.n_qubits, 8);
        assert_eq!(inc.layout.clique_flag, inc.layout.edge_check.unwrap());
    }

    #[test]
    fn marks_triangle_on_g4() {
        let g = fixtures::g4();
        let solution = subset_to_bitstring(&find_cliques_bruteforce(&g, 3).unwrap()[0], 4).index;
        for style in [OracleStyle::Checking, OracleStyle::Incremental] {
            for count_nodes in [false, true] {
                let o = build_oracle(&g, 3, OracleMode { style, count_nodes }).unwrap();
                for s in 0..16usize {
                    if !count_nodes && s.count_ones() != 3 {
                        continue;
                    }
                    let out = apply(&o.circuit, s);
                    let sign = if s == solution { -1.0 } else { 1.0 };
                    assert!((out.amplitude(s) - Complex64::new(sign, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn triangle_free_star_is_identity() {
        let g = fixtures::star4();
        for style in [OracleStyle::Checking, OracleStyle::Incremental] {
            for count_nodes in [false, true] {
                let o = build_oracle(&g, 3, OracleMode { style, count_nodes }).unwrap();
                for s in 0..16usize {
                    if !count_nodes && s.count_ones() != 3 {
                        continue;
                    }
                    assert!((apply(&o.circuit, s).amplitude(s) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn errors() {
        let mode = OracleMode {
            style: OracleStyle::Checking,
            count_nodes: true,
        };
        assert_eq!(
            build_oracle(&fixtures::g4(), 1, mode).unwrap_err(),
            OracleError::CliqueTooSmall(1)
        );
        assert!(matches!(
            build_oracle(&fixtures::g4(), 5, mode),
            Err(OracleError::CliqueTooLarge { .. })
        ));
        assert_eq!(
            build_oracle(&Graph::empty(4), 2, mode).unwrap_err(),
            OracleError::NoEdges
        );
    }
}
