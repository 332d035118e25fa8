//! Iteration counts, the diffusion operator and full algorithm assembly.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::circuit::{Circuit, Gate};
use crate::graph::{find_cliques_bruteforce, subset_to_bitstring, Graph, GraphError, NodeSubset};
use crate::oracle::{build_oracle, CounterLayout, OracleError, OracleMode, OracleStyle};
use crate::stateprep::{PrepError, PrepMode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroverError {
    #[error("no solutions known (m = 0); the optimal iteration count is undefined")]
    NoSolutions,
    #[error("search space must be non-empty")]
    EmptySearchSpace,
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// `floor(pi/4 * sqrt(N/m))`.
pub fn opt_iter(search_space: u128, solutions: u128) -> Result<u64, GroverError> {
    if solutions == 0 {
        return Err(GroverError::NoSolutions);
    }
    if search_space == 0 {
        return Err(GroverError::EmptySearchSpace);
    }
    let ratio = search_space as f64 / solutions as f64;
    Ok(libm::floor(PI / 4.0 * libm::sqrt(ratio)) as u64)
}

/// `sin^2((2j + 1) asin(sqrt(m/N)))`: the success probability after `j`
/// ideal iterations with `m` marked states out of `N`.
pub fn success_probability_analytic(search_space: u128, solutions: u128, iterations: u64) -> f64 {
    let theta = libm::asin(libm::sqrt(solutions as f64 / search_space as f64));
    let s = libm::sin((2 * iterations + 1) as f64 * theta);
    s * s
}

/// Reflection about `prep|0>`: `prep . (I - 2|0><0|) . prep^-1`, with the
/// central reflection built as an X-conjugated MCZ.
///
/// The result equals `-(2|psi><psi| - I)`, the usual diffuser up to global
/// phase. It acts on `prep`'s own qubits.
pub fn diffusion(prep: &Circuit) -> Circuit {
    let mut c = prep.adjoint();
    let all: Vec<usize> = (0..prep.n_qubits()).collect();
    for &q in &all {
        c.push(Gate::x(q));
    }
    c.push(Gate::mcz(&all));
    for &q in &all {
        c.push(Gate::x(q));
    }
    c.append(prep).expect("same width");
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iterations {
    /// Use [`opt_iter`].
    Auto,
    Fixed(u64),
}

/// Parameters of an assembled search.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GroverPlan {
    pub k: usize,
    /// `N`: size of the prepared search space.
    pub search_space: u128,
    /// `m`: number of `k`-cliques, found classically.
    pub solutions: u128,
    pub iterations: u64,
    pub prep: PrepMode,
    pub oracle: OracleMode,
}

impl GroverPlan {
    pub fn analytic_success(&self) -> f64 {
        if self.solutions == 0 {
            0.0
        } else {
            success_probability_analytic(self.search_space, self.solutions, self.iterations)
        }
    }
}

/// A complete search circuit.
#[derive(Debug, Clone)]
pub struct GroverCircuit {
    pub plan: GroverPlan,
    pub circuit: Circuit,
    pub layout: CounterLayout,
    pub cliques: Vec<NodeSubset>,
}

impl GroverCircuit {
    /// The node register, which is what gets measured.
    pub fn measured(&self) -> Vec<usize> {
        self.layout.nodes.clone().collect()
    }

    /// Measured-outcome indices of every solution.
    pub fn solution_indices(&self) -> Vec<usize> {
        let n = self.layout.nodes.len();
        self.cliques.iter().map(|c| subset_to_bitstring(c, n).index).collect()
    }

    /// Display strings of every solution.
    pub fn solution_bitstrings(&self) -> Vec<alloc::string::String> {
        let n = self.layout.nodes.len();
        self.cliques.iter().map(|c| subset_to_bitstring(c, n).display).collect()
    }
}

/// Prep on the node register, then `iterations` rounds of oracle and
/// diffusion.
///
/// The oracle counts nodes only when `prep` does not already fix the
/// Hamming weight. With [`Iterations::Auto`] a graph without `k`-cliques is
/// rejected with [`GroverError::NoSolutions`].
pub fn assemble(
    g: &Graph,
    k: usize,
    prep: PrepMode,
    style: OracleStyle,
    iterations: Iterations,
) -> Result<GroverCircuit, GroverError> {
    let n = g.node_count();
    prep.validate(n, k)?;
    let mode = OracleMode {
        style,
        count_nodes: !prep.restricts_weight(),
    };
    let oracle = build_oracle(g, k, mode)?;
    let cliques = find_cliques_bruteforce(g, k)?;
    let solutions = cliques.len() as u128;
    let search_space = prep.search_space_size(n);
    let iterations = match iterations {
        Iterations::Auto => opt_iter(search_space, solutions)?,
        Iterations::Fixed(j) => j,
    };
    let prep_circuit = prep.circuit(n)?;
    let diffuser = diffusion(&prep_circuit);
    let nodes: Vec<usize> = oracle.layout.nodes.clone().collect();

    let mut circuit = oracle.circuit.empty_like();
    circuit
        .append_mapped(&prep_circuit, &nodes)
        .expect("node register fits");
    for _ in 0..iterations {
        circuit.append(&oracle.circuit).expect("same layout");
        circuit.append_mapped(&diffuser, &nodes).expect("node register fits");
    }

    Ok(GroverCircuit {
        plan: GroverPlan {
            k,
            search_space,
            solutions,
            iterations,
            prep,
            oracle: mode,
        },
        circuit,
        layout: oracle.layout,
        cliques,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;
    use crate::sim::StateVector;
    use crate::stateprep::{full_superposition, w_complement};

    #[test]
    fn iteration_counts() {
        assert_eq!(opt_iter(16, 1).unwrap(), 3);
        assert_eq!(opt_iter(4, 1).unwrap(), 1);
        assert_eq!(opt_iter(7, 7).unwrap(), 0);
        assert_eq!(opt_iter(16, 0), Err(GroverError::NoSolutions));
    }

    #[test]
    fn analytic_values() {
        assert!((success_probability_analytic(4, 1, 1) - 1.0).abs() < 1e-15);
        assert!((success_probability_analytic(16, 1, 3) - 0.9613).abs() < 1e-4);
        assert!((success_probability_analytic(10, 3, 0) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn full_diffuser_fixes_its_axis() {
        let prep = full_superposition(4).unwrap();
        let mut s = StateVector::new(4);
        s.apply_circuit(&prep);
        let before = s.clone();
        s.apply_circuit(&diffusion(&prep));
        assert!((before.inner(&s).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diffusion_is_an_involution() {
        let prep = w_complement(4).unwrap();
        let d = diffusion(&prep);
        let mut s = StateVector::new(4);
        s.apply_gate(&Gate::h(0));
        s.apply_gate(&Gate::ry(0.8, 2));
        let before = s.clone();
        s.apply_circuit(&d);
        s.apply_circuit(&d);
        assert!((before.inner(&s) - num_complex::Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn assembly_iteration_counts() {
        let g = fixtures::g4();
        let w = assemble(&g, 3, PrepMode::WComplement, OracleStyle::Checking, Iterations::Auto).unwrap();
        assert_eq!(w.plan.iterations, 1);
        let full = assemble(&g, 3, PrepMode::Full, OracleStyle::Checking, Iterations::Auto).unwrap();
        assert_eq!(full.plan.iterations, 3);
        let d = assemble(&g, 3, PrepMode::Dicke(3), OracleStyle::Incremental, Iterations::Auto).unwrap();
        assert_eq!(d.plan.iterations, 1);
        assert_eq!(d.solution_bitstrings(), ["0111"]);
    }

    #[test]
    fn assembly_errors() {
        let g = fixtures::g4();
        assert!(matches!(
            assemble(&g, 2, PrepMode::WComplement, OracleStyle::Checking, Iterations::Auto),
            Err(GroverError::Prep(PrepError::WComplementNeedsKNMinusOne { .. }))
        ));
        assert_eq!(
            assemble(
                &fixtures::star4(),
                3,
                PrepMode::Full,
                OracleStyle::Checking,
                Iterations::Auto
            )
            .unwrap_err(),
            GroverError::NoSolutions
        );
        assert_eq!(
            assemble(
                &Graph::empty(3),
                2,
                PrepMode::Full,
                OracleStyle::Checking,
                Iterations::Auto
            )
            .unwrap_err(),
            GroverError::Oracle(OracleError::NoEdges)
        );
        let zero = assemble(
            &fixtures::star4(),
            3,
            PrepMode::Full,
            OracleStyle::Checking,
            Iterations::Fixed(0),
        )
        .unwrap();
        assert_eq!(zero.circuit.len(), 4);
    }
}
