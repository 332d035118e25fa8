//! Lowering of multi-controlled and controlled-rotation gates.
//!
//! Multi-controlled gates become Toffoli ladders over clean ancillas: the
//! AND of the controls is computed into the ancillas, the target is hit
//! once, and the ladder is mirrored to return every ancilla to zero. An MCZ
//! over `m` qubits costs `1 CZ + (2m - 4) CCX`; an MCX with `c` controls
//! costs `2c - 3` CCX.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{Circuit, Gate, GateKind};

/// Kinds that survive [`decompose_mc`].
pub const LOWERED_KINDS: [GateKind; 7] = [
    GateKind::X,
    GateKind::Cx,
    GateKind::Ccx,
    GateKind::Cz,
    GateKind::H,
    GateKind::U3,
    GateKind::U2,
];

/// Clean ancillas needed to lower `gate`.
pub fn ancillas_needed(gate: &Gate) -> usize {
    match gate.kind() {
        GateKind::Mcx => gate.qubits().len().saturating_sub(3),
        GateKind::Mcz => gate.qubits().len().saturating_sub(2),
        _ => 0,
    }
}

/// Rewrites `c` over [`LOWERED_KINDS`].
///
/// An `ancilla` register is appended when any gate needs one; it is shared
/// by all gates since each ladder uncomputes itself.
pub fn decompose_mc(c: &Circuit) -> Circuit {
    let need = c.ops().iter().map(ancillas_needed).max().unwrap_or(0);
    let mut out = Circuit {
        n_qubits: c.n_qubits,
        registers: c.registers.clone(),
        ops: Vec::with_capacity(c.len()),
    };
    let anc: Vec<usize> = if need > 0 {
        out.add_register("ancilla", need).collect()
    } else {
        Vec::new()
    };
    for g in c.ops() {
        lower_gate(g, &anc, &mut out.ops);
    }
    out
}

fn lower_gate(g: &Gate, anc: &[usize], out: &mut Vec<Gate>) {
    let q = g.qubits();
    let theta = g.raw_params()[0];
    match g.kind() {
        GateKind::X | GateKind::Cx | GateKind::Ccx | GateKind::Cz | GateKind::H | GateKind::U3 | GateKind::U2 => {
            out.push(g.clone())
        }
        GateKind::Z => out.push(Gate::u3(0.0, 0.0, PI, q[0])),
        GateKind::Ry => out.push(Gate::u3(theta, 0.0, 0.0, q[0])),
        GateKind::Cry => {
            let (c, t) = (q[0], q[1]);
            out.push(Gate::u3(theta / 2.0, 0.0, 0.0, t));
            out.push(Gate::cx(c, t));
            out.push(Gate::u3(-theta / 2.0, 0.0, 0.0, t));
            out.push(Gate::cx(c, t));
        }
        GateKind::Ccry => {
            let (c0, c1, t) = (q[0], q[1], q[2]);
            out.push(Gate::u3(theta / 2.0, 0.0, 0.0, t));
            out.push(Gate::ccx(c0, c1, t));
            out.push(Gate::u3(-theta / 2.0, 0.0, 0.0, t));
            out.push(Gate::ccx(c0, c1, t));
        }
        GateKind::Mcx => {
            let (controls, target) = (&q[..q.len() - 1], q[q.len() - 1]);
            match controls.len() {
                1 => out.push(Gate::cx(controls[0], target)),
                2 => out.push(Gate::ccx(controls[0], controls[1], target)),
                _ => {
                    let (head, last) = controls.split_at(controls.len() - 1);
                    let ladder = and_ladder(head, anc);
                    out.extend(ladder.iter().cloned());
                    out.push(Gate::ccx(last[0], anc[head.len() - 2], target));
                    out.extend(ladder.iter().rev().cloned());
                }
            }
        }
        GateKind::Mcz => match q.len() {
            2 => out.push(Gate::cz(q[0], q[1])),
            _ => {
                let (head, last) = q.split_at(q.len() - 1);
                let ladder = and_ladder(head, anc);
                out.extend(ladder.iter().cloned());
                out.push(Gate::cz(anc[head.len() - 2], last[0]));
                out.extend(ladder.iter().rev().cloned());
            }
        },
    }
}

/// CCX chain leaving the AND of `inputs` (at least two) in
/// `anc[inputs.len() - 2]`.
fn and_ladder(inputs: &[usize], anc: &[usize]) -> Vec<Gate> {
    let mut gates = Vec::with_capacity(inputs.len() - 1);
    gates.push(Gate::ccx(inputs[0], inputs[1], anc[0]));
    for i in 2..inputs.len() {
        gates.push(Gate::ccx(inputs[i], anc[i - 2], anc[i - 1]));
    }
    gates
}
