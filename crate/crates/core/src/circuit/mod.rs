//! Gate-level circuits over named qubit registers.

mod gate;
mod lower;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

pub use gate::{Gate, GateError, GateKind};
pub use lower::{ancillas_needed, decompose_mc, LOWERED_KINDS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("width mismatch: {left} vs {right} qubits")]
    WidthMismatch { left: usize, right: usize },
    #[error("operand {qubit} outside circuit of width {width}")]
    OperandOutOfRange { qubit: usize, width: usize },
    #[error("qubit map has {got} entries, circuit has {expected} qubits")]
    MapLength { expected: usize, got: usize },
    #[error(transparent)]
    Gate(#[from] GateError),
}

/// A named, contiguous block of qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Register {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Register {
    pub fn range(&self) -> Range<usize> {
        self.start..self.start + self.len
    }

    pub fn qubits(&self) -> Vec<usize> {
        self.range().collect()
    }
}

/// An ordered gate list over registers that tile `0..n_qubits`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    n_qubits: usize,
    registers: Vec<Register>,
    ops: Vec<Gate>,
}

impl Circuit {
    pub fn new() -> Self {
        Self::default()
    }

    /// Same registers as `self`, no gates.
    pub fn empty_like(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            registers: self.registers.clone(),
            ops: Vec::new(),
        }
    }

    /// A circuit holding a single register.
    pub fn with_register(name: &str, len: usize) -> Self {
        let mut c = Self::new();
        c.add_register(name, len);
        c
    }

    /// Appends a register after all existing qubits and returns its range.
    pub fn add_register(&mut self, name: &str, len: usize) -> Range<usize> {
        let start = self.n_qubits;
        self.registers.push(Register {
            name: name.to_string(),
            start,
            len,
        });
        self.n_qubits += len;
        start..start + len
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn register(&self, name: &str) -> Option<&Register> {
        self.registers.iter().find(|r| r.name == name)
    }

    pub fn ops(&self) -> &[Gate] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn try_push(&mut self, gate: Gate) -> Result<&mut Self, CircuitError> {
        if let Some(&qubit) = gate.qubits().iter().find(|&&q| q >= self.n_qubits) {
            return Err(CircuitError::OperandOutOfRange {
                qubit,
                width: self.n_qubits,
            });
        }
        self.ops.push(gate);
        Ok(self)
    }

    /// Appends a gate.
    ///
    /// Panics if an operand lies outside the circuit; use [`Circuit::try_push`]
    /// for untrusted input.
    pub fn push(&mut self, gate: Gate) -> &mut Self {
        if let Err(e) = self.try_push(gate) {
            panic!("{e}");
        }
        self
    }

    /// Appends `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self, CircuitError> {
        if other.n_qubits != self.n_qubits {
            return Err(CircuitError::WidthMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        self.ops.extend(other.ops.iter().cloned());
        Ok(self)
    }

    /// Appends `other` with its qubit `i` relabelled to `map[i]`.
    pub fn append_mapped(&mut self, other: &Circuit, map: &[usize]) -> Result<&mut Self, CircuitError> {
        if map.len() != other.n_qubits {
            return Err(CircuitError::MapLength {
                expected: other.n_qubits,
                got: map.len(),
            });
        }
        if let Some(&qubit) = map.iter().find(|&&q| q >= self.n_qubits) {
            return Err(CircuitError::OperandOutOfRange {
                qubit,
                width: self.n_qubits,
            });
        }
        self.ops.extend(other.ops.iter().map(|g| g.remapped(|q| map[q])));
        Ok(self)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        let mut out = self.clone();
        out.append(other)?;
        Ok(out)
    }

    /// Reversed gate order with every gate inverted.
    pub fn adjoint(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            registers: self.registers.clone(),
            ops: self.ops.iter().rev().map(Gate::inverse).collect(),
        }
    }

    pub fn metrics(&self) -> Metrics {
        let mut counts = BTreeMap::new();
        for g in &self.ops {
            *counts.entry(g.kind()).or_insert(0) += 1;
        }
        let depth = self.schedule(|_| 1.0).makespan as usize;
        Metrics {
            size: self.ops.len(),
            depth,
            counts,
            n_qubits: self.n_qubits,
        }
    }

    /// ASAP schedule: each gate starts once all of its operands are free.
    pub fn schedule(&self, mut duration: impl FnMut(&Gate) -> f64) -> Schedule {
        let mut ready = alloc::vec![0.0f64; self.n_qubits];
        let mut starts = Vec::with_capacity(self.ops.len());
        let mut makespan = 0.0f64;
        for g in &self.ops {
            let start = g.qubits().iter().map(|&q| ready[q]).fold(0.0, f64::max);
            let end = start + duration(g);
            for &q in g.qubits() {
                ready[q] = end;
            }
            makespan = makespan.max(end);
            starts.push(start);
        }
        Schedule { starts, makespan }
    }
}

/// Gate start times and total length of an ASAP schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub starts: Vec<f64>,
    pub makespan: f64,
}

/// Size, depth (unit-time critical path), per-kind counts and width.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Metrics {
    pub size: usize,
    pub depth: usize,
    pub counts: BTreeMap<GateKind, usize>,
    pub n_qubits: usize,
}

impl Metrics {
    pub fn count(&self, kind: GateKind) -> usize {
        self.counts.get(&kind).copied().unwrap_or(0)
    }
}

/// Text dump: a `qubits N` header, one `register NAME START LEN` line per
/// register, then one gate per line as `KIND q0,q1,... [angles]`.
impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n_qubits)?;
        for r in &self.registers {
            writeln!(f, "register {} {} {}", r.name, r.start, r.len)?;
        }
        for g in &self.ops {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
