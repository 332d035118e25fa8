use kclique_core::graph::{fixtures, Graph};
use kclique_core::grover::{assemble, opt_iter, success_probability_analytic, Iterations};
use kclique_core::sim::run_ideal;
use kclique_core::{OracleStyle, PrepMode, StateVector};
use proptest::prelude::*;

fn ideal_success(g: &Graph, k: usize, prep: PrepMode, style: OracleStyle, iters: Iterations) -> (f64, f64) {
    let gc = assemble(g, k, prep, style, iters).unwrap();
    let run = run_ideal(&gc.circuit, &gc.measured(), 1, 0);
    let found: f64 = gc.solution_bitstrings().iter().map(|b| run.probability(b)).sum();
    (found, gc.plan.analytic_success())
}

#[test]
fn success_matches_analytic_on_fixtures() {
    let cases: [(Graph, usize, PrepMode); 6] = [
        (fixtures::g4(), 3, PrepMode::Full),
        (fixtures::g4(), 3, PrepMode::WComplement),
        (fixtures::g4(), 3, PrepMode::Dicke(3)),
        (fixtures::g4(), 2, PrepMode::Full),
        (fixtures::g6(), 4, PrepMode::Dicke(4)),
        (fixtures::g6(), 3, PrepMode::Dicke(3)),
    ];
    for (g, k, prep) in cases {
        for style in [OracleStyle::Checking, OracleStyle::Incremental] {
            let (p, analytic) = ideal_success(&g, k, prep, style, Iterations::Auto);
            assert!(
                (p - analytic).abs() < 1e-6,
                "{prep:?} {style:?} k={k}: {p} vs {analytic}"
            );
        }
    }
}

#[test]
fn six_node_full_space() {
    let (p, analytic) = ideal_success(
        &fixtures::g6(),
        4,
        PrepMode::Full,
        OracleStyle::Checking,
        Iterations::Auto,
    );
    assert!((p - analytic).abs() < 1e-6);
    assert!(p > 0.99);
}

#[test]
fn success_is_periodic_in_iterations() {
    let g = fixtures::g4();
    for j in 0..12 {
        let (p, analytic) = ideal_success(&g, 3, PrepMode::Full, OracleStyle::Checking, Iterations::Fixed(j));
        assert!((p - analytic).abs() < 1e-6, "j={j}");
    }
    // N = 16, m = 1: peaks at j = 3, falls back near zero by j = 6
    let curve: Vec<f64> = (0..=6).map(|j| success_probability_analytic(16, 1, j)).collect();
    assert!(curve.windows(2).take(3).all(|w| w[1] > w[0]));
    assert!(curve.windows(2).skip(3).all(|w| w[1] < w[0]));
}

#[test]
fn restricted_runs_stay_on_weight_k() {
    let g = fixtures::g6();
    for j in 0..4 {
        let gc = assemble(
            &g,
            3,
            PrepMode::Dicke(3),
            OracleStyle::Incremental,
            Iterations::Fixed(j),
        )
        .unwrap();
        let mut s = StateVector::new(gc.circuit.n_qubits());
        s.apply_circuit(&gc.circuit);
        let marginal = s.marginal(&gc.measured());
        let off: f64 = marginal
            .iter()
            .enumerate()
            .filter(|(i, _)| i.count_ones() != 3)
            .map(|(_, p)| p)
            .sum();
        assert!(off < 1e-10, "j={j}: {off}");
    }
}

proptest! {
    #[test]
    fn opt_iter_formula(n in 1u32..40, m in 1u128..64) {
        let big_n = 1u128 << n;
        prop_assume!(m <= big_n);
        let j = opt_iter(big_n, m).unwrap();
        let exact = (std::f64::consts::PI / 4.0 * (big_n as f64 / m as f64).sqrt()).floor() as u64;
        prop_assert_eq!(j, exact);
    }

    #[test]
    fn analytic_success_is_a_probability(n in 1u128..1000, m in 1u128..1000, j in 0u64..50) {
        prop_assume!(m <= n);
        let p = success_probability_analytic(n, m, j);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&p));
    }
}
