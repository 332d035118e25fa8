use kclique_core::circuit::decompose_mc;
use kclique_core::graph::{fixtures, Graph};
use kclique_core::grover::{assemble, Iterations};
use kclique_core::oracle::{build_oracle, OracleMode};
use kclique_core::resources::{linear_fit, report, ConfigDescriptor, ResourceReport};
use kclique_core::stateprep::{dicke_prep, w_complement};
use kclique_core::{GateKind, OracleStyle, PrepMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn g4_report(prep: PrepMode, style: OracleStyle) -> ResourceReport {
    let g = fixtures::g4();
    let gc = assemble(&g, 3, prep, style, Iterations::Auto).unwrap();
    report(&gc.circuit, ConfigDescriptor::for_grover(&gc, &g))
}

fn within_factor(value: usize, reference: f64, factor: f64) -> bool {
    let v = value as f64;
    v >= reference / factor && v <= reference * factor
}

#[test]
fn full_checking_is_near_published_scale() {
    let r = g4_report(PrepMode::Full, OracleStyle::Checking);
    assert_eq!(r.config.iterations, 3);
    for (size, depth) in [(r.size, r.depth), (r.decomposed_size, r.decomposed_depth)] {
        assert!(within_factor(size, 214.0, 2.0), "size {size}");
        assert!(within_factor(depth, 165.0, 2.0), "depth {depth}");
    }
}

#[test]
fn w_prep_gate_mix() {
    let m = decompose_mc(&w_complement(4).unwrap()).metrics();
    assert_eq!(m.size, 17);
    assert_eq!(
        (m.count(GateKind::U3), m.count(GateKind::Cx), m.count(GateKind::X)),
        (6, 6, 5)
    );
}

#[test]
fn dicke_prep_gate_mix() {
    let m = decompose_mc(&dicke_prep(4, 3).unwrap()).metrics();
    assert_eq!(m.size, 39);
    assert_eq!(
        (
            m.count(GateKind::Cx),
            m.count(GateKind::U3),
            m.count(GateKind::Ccx),
            m.count(GateKind::X)
        ),
        (18, 12, 6, 3)
    );
}

#[test]
fn w_checking_is_smallest_of_six() {
    let preps = [PrepMode::Full, PrepMode::WComplement, PrepMode::Dicke(3)];
    let styles = [OracleStyle::Checking, OracleStyle::Incremental];
    let reports: Vec<ResourceReport> = preps
        .iter()
        .flat_map(|&p| styles.iter().map(move |&s| g4_report(p, s)))
        .collect();
    let best = g4_report(PrepMode::WComplement, OracleStyle::Checking);
    assert!(reports.iter().all(|r| best.decomposed_size <= r.decomposed_size));
    let others = reports.iter().filter(|r| r.config != best.config);
    assert!(others.clone().all(|r| best.size < r.size));
    for r in &reports {
        assert!(r.counts.total() <= r.decomposed_size);
        assert!(r.required_qv.value().unwrap().is_power_of_two());
    }
}

#[test]
fn w_checking_needs_nine_qubits_and_qv_512() {
    let r = g4_report(PrepMode::WComplement, OracleStyle::Checking);
    assert_eq!(r.decomposed_n_qubits, 9);
    assert_eq!(r.required_qv.value(), Some(512));
    assert_eq!(r.year_estimate.year, 2024);
}

#[test]
fn oracle_size_is_linear_in_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 12;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for style in [OracleStyle::Checking, OracleStyle::Incremental] {
        for count_nodes in [false, true] {
            let (mut xs, mut ys) = (Vec::new(), Vec::new());
            for e in (4..pairs.len()).step_by(4) {
                let mut chosen = pairs.clone();
                for i in 0..e {
                    let j = rng.gen_range(i..chosen.len());
                    chosen.swap(i, j);
                }
                let g = Graph::new(n, chosen[..e].iter().copied()).unwrap();
                let o = build_oracle(&g, 4, OracleMode { style, count_nodes }).unwrap();
                xs.push(e as f64);
                ys.push(decompose_mc(&o.circuit).len() as f64);
            }
            let fit = linear_fit(&xs, &ys).unwrap();
            assert!(fit.r_squared >= 0.99, "{style:?} {count_nodes}: {fit:?}");
            assert!(fit.slope > 0.0);
        }
    }
}
