use kclique_core::circuit::{ancillas_needed, decompose_mc, Circuit, Gate, GateKind, LOWERED_KINDS};
use kclique_core::StateVector;
use proptest::prelude::*;

/// Runs `native` and its lowering on every basis input over the native
/// width and compares the outputs, ancillas included.
fn assert_equivalent(native: &Circuit) {
    let lowered = decompose_mc(native);
    let w = native.n_qubits();
    let keep: Vec<usize> = (0..w).collect();
    for input in 0..1usize << w {
        let mut a = StateVector::basis(w, input);
        a.apply_circuit(native);
        let mut b = StateVector::basis(lowered.n_qubits(), input);
        b.apply_circuit(&lowered);
        assert!(
            (b.mass_with_others_clear(&keep) - 1.0).abs() < 1e-10,
            "ancilla left set, input {input}"
        );
        for i in 0..1usize << w {
            assert!(
                (a.amplitude(i) - b.amplitude(i)).norm() < 1e-10,
                "input {input} amplitude {i}"
            );
        }
    }
    assert!(lowered.ops().iter().all(|g| LOWERED_KINDS.contains(&g.kind())));
}

#[test]
fn mcx_three_controls_all_inputs() {
    let mut c = Circuit::with_register("q", 4);
    c.push(Gate::mcx(&[0, 1, 2], 3));
    assert_equivalent(&c);
    let lowered = decompose_mc(&c);
    assert_eq!(lowered.metrics().count(GateKind::Ccx), 3);
    assert_eq!(lowered.n_qubits(), 5);
}

#[test]
fn every_multi_controlled_shape_up_to_six() {
    for width in 3..=6 {
        let all: Vec<usize> = (0..width).collect();
        let mut c = Circuit::with_register("q", width);
        c.push(Gate::mcx(&all[..width - 1], width - 1));
        assert_equivalent(&c);
        let mut c = Circuit::with_register("q", width);
        c.push(Gate::mcz(&all));
        assert_equivalent(&c);
        // permuted operands
        let mut c = Circuit::with_register("q", width);
        let mut rev = all.clone();
        rev.reverse();
        c.push(Gate::mcx(&rev[..width - 1], rev[width - 1]));
        assert_equivalent(&c);
    }
}

#[test]
fn controlled_rotations_lower_exactly() {
    let mut c = Circuit::with_register("q", 3);
    c.push(Gate::h(0))
        .push(Gate::h(1))
        .push(Gate::cry(1.1, 0, 2))
        .push(Gate::ccry(-0.7, 0, 1, 2))
        .push(Gate::ry(0.4, 1))
        .push(Gate::z(2));
    assert_equivalent(&c);
}

#[test]
fn shared_ancillas_sized_by_widest_gate() {
    let mut c = Circuit::with_register("q", 6);
    c.push(Gate::mcx(&[0, 1, 2], 3)).push(Gate::mcz(&[0, 1, 2, 3, 4, 5]));
    let lowered = decompose_mc(&c);
    let widest = c.ops().iter().map(ancillas_needed).max().unwrap();
    assert_eq!(widest, 4);
    assert_eq!(lowered.n_qubits(), 6 + widest);
    assert_equivalent(&c);
}

fn arb_gate() -> impl Strategy<Value = Gate> {
    let perm = Just((0..5usize).collect::<Vec<_>>()).prop_shuffle();
    (0usize..8, perm, -3.0f64..3.0, 2usize..=5).prop_map(|(pick, q, a, m)| match pick {
        0 => Gate::h(q[0]),
        1 => Gate::cx(q[0], q[1]),
        2 => Gate::ccx(q[0], q[1], q[2]),
        3 => Gate::mcx(&q[..m - 1], q[m - 1]),
        4 => Gate::mcz(&q[..m]),
        5 => Gate::cry(a, q[0], q[1]),
        6 => Gate::ccry(a, q[0], q[1], q[2]),
        _ => Gate::u3(a, -a, 0.5 * a, q[0]),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn random_circuits_lower_exactly(gates in proptest::collection::vec(arb_gate(), 1..8)) {
        let mut c = Circuit::with_register("q", 5);
        for g in gates {
            c.push(g);
        }
        assert_equivalent(&c);
    }
}
