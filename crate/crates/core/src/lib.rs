//! Gate-level Grover search for the k-clique problem.
//!
//! The crate builds circuits out of a small typed gate vocabulary and keeps
//! everything needed to reason about them in one place:
//!
//! - [`graph`]: undirected graphs, the edge-list text format and the
//!   classical brute-force clique enumerator every quantum result is checked
//!   against.
//! - [`circuit`]: registers, gates, composition, adjoint, multi-controlled
//!   gate lowering and size/depth metrics.
//! - [`stateprep`]: full superposition, W, complemented W and Dicke state
//!   preparation.
//! - [`oracle`]: the checking-based and incremental-based clique oracles.
//! - [`grover`]: iteration counts, the diffusion operator and full assembly.
//! - [`sim`]: dense statevector execution and thermal-relaxation
//!   trajectories.
//! - [`resources`]: resource reports and quantum-volume estimates.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod circuit;
pub mod graph;
pub mod grover;
pub mod math;
pub mod oracle;
pub mod resources;
pub mod sim;
pub mod stateprep;

pub use circuit::{Circuit, Gate, GateKind, Register};
pub use graph::{Graph, NodeSubset};
pub use grover::{GroverPlan, Iterations};
pub use oracle::{CounterLayout, OracleMode, OracleStyle};
pub use sim::{MeasurementHistogram, NoiseProfile, StateVector};
pub use stateprep::PrepMode;
