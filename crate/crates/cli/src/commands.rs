//! The subcommands as plain functions from settings to reports.

use std::fmt::Write as _;

use anyhow::{bail, Context};
use kclique_core::circuit::Register;
use kclique_core::graph::{find_cliques_bruteforce, index_to_bitstring, index_to_subset, subset_to_bitstring};
use kclique_core::grover::{assemble, GroverCircuit, GroverError, Iterations};
use kclique_core::resources::{report, ConfigDescriptor, ResourceReport, TABLE_ROWS};
use kclique_core::sim::{run_ideal, MeasurementHistogram};
use kclique_core::{Graph, NoiseProfile, OracleStyle, PrepMode, StateVector};
use serde::Serialize;

use crate::input::LoadedGraph;
use crate::output::{table, Report};
use crate::runner::{run_noisy_parallel, Sampling};

/// Initial-state choice; Dicke takes its weight from `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrepKind {
    Full,
    W,
    Dicke,
}

impl PrepKind {
    pub fn mode(self, k: usize) -> PrepMode {
        match self {
            PrepKind::Full => PrepMode::Full,
            PrepKind::W => PrepMode::WComplement,
            PrepKind::Dicke => PrepMode::Dicke(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleKind {
    Checking,
    Incremental,
}

impl From<OracleKind> for OracleStyle {
    fn from(o: OracleKind) -> Self {
        match o {
            OracleKind::Checking => OracleStyle::Checking,
            OracleKind::Incremental => OracleStyle::Incremental,
        }
    }
}

/// One `(prep, oracle)` configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Config {
    pub prep: PrepKind,
    pub oracle: OracleKind,
}

impl Config {
    /// Every prep against every oracle, preps outermost.
    pub fn all() -> Vec<Config> {
        let preps = [PrepKind::Full, PrepKind::W, PrepKind::Dicke];
        let oracles = [OracleKind::Checking, OracleKind::Incremental];
        preps
            .iter()
            .flat_map(|&prep| oracles.iter().map(move |&oracle| Config { prep, oracle }))
            .collect()
    }

    pub fn label(self) -> String {
        format!(
            "{}/{}",
            self.prep.mode(0).label(),
            OracleStyle::from(self.oracle).label()
        )
    }
}

impl std::str::FromStr for Config {
    type Err = String;

    /// `prep:oracle`, e.g. `w:checking`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use clap::ValueEnum;
        let (p, o) = s
            .split_once(':')
            .ok_or_else(|| format!("expected prep:oracle, got {s:?}"))?;
        Ok(Config {
            prep: PrepKind::from_str(p, true)?,
            oracle: OracleKind::from_str(o, true)?,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub nodes: usize,
    pub edges: usize,
}

impl GraphInfo {
    fn of(g: &LoadedGraph) -> Self {
        Self {
            source: g.source.clone(),
            nodes: g.graph.node_count(),
            edges: g.graph.edge_count(),
        }
    }
}

fn build(g: &Graph, k: usize, config: Config, iters: Iterations) -> anyhow::Result<GroverCircuit> {
    assemble(g, k, config.prep.mode(k), config.oracle.into(), iters).map_err(|e| match e {
        GroverError::NoSolutions => anyhow::anyhow!("{e}; pass --iters to build the circuit anyway"),
        other => other.into(),
    })
}

// ---- solve ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Solved,
    NoClique,
    Failed,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlanInfo {
    pub prep: &'static str,
    pub oracle: &'static str,
    pub iterations: u64,
    pub search_space: u128,
    pub solutions: u128,
    pub qubits: usize,
    pub gates: usize,
    pub analytic_success: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopOutcome {
    pub bitstring: String,
    pub nodes: String,
    pub probability: f64,
    pub is_clique: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HistogramRow {
    pub bitstring: String,
    pub count: u64,
    pub frequency: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutcomeSummary {
    pub shots: u64,
    /// Exact (ideal) or trajectory-averaged probability of any clique.
    pub success_probability: f64,
    pub stderr: Option<f64>,
    pub top: TopOutcome,
    pub pass: bool,
    pub histogram: Vec<HistogramRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoisyInfo {
    pub profile: NoiseProfile,
    pub trajectories: u64,
    pub outcome: OutcomeSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub graph: GraphInfo,
    pub k: usize,
    pub cliques: Vec<String>,
    pub status: Status,
    pub plan: Option<PlanInfo>,
    pub ideal: Option<OutcomeSummary>,
    pub noisy: Option<NoisyInfo>,
}

fn summarize(
    g: &Graph,
    k: usize,
    probabilities: &[f64],
    histogram: &MeasurementHistogram,
    success: (f64, Option<f64>),
) -> OutcomeSummary {
    let n = g.node_count();
    let (best, &p) = probabilities
        .iter()
        .enumerate()
        .fold((0, &f64::MIN), |acc, (i, p)| if *p > *acc.1 { (i, p) } else { acc });
    let subset = index_to_subset(best, n);
    let is_clique = subset.len() == k && g.is_clique(subset.members());
    OutcomeSummary {
        shots: histogram.shots,
        success_probability: success.0,
        stderr: success.1,
        top: TopOutcome {
            bitstring: index_to_bitstring(best, n),
            nodes: subset.to_string(),
            probability: p,
            is_clique,
        },
        pass: is_clique,
        histogram: histogram
            .counts
            .iter()
            .map(|(b, &c)| HistogramRow {
                bitstring: b.clone(),
                count: c,
                frequency: histogram.success_probability(b),
            })
            .collect(),
    }
}

/// Brute-force preflight, then ideal and (optionally) noisy simulation.
pub fn solve(
    input: &LoadedGraph,
    k: usize,
    config: Config,
    iters: Iterations,
    sampling: Sampling,
    noise: Option<&NoiseProfile>,
) -> anyhow::Result<SolveReport> {
    let g = &input.graph;
    let cliques = find_cliques_bruteforce(g, k)?;
    let mut report = SolveReport {
        graph: GraphInfo::of(input),
        k,
        cliques: cliques.iter().map(ToString::to_string).collect(),
        status: Status::NoClique,
        plan: None,
        ideal: None,
        noisy: None,
    };
    if cliques.is_empty() {
        return Ok(report);
    }
    let gc = build(g, k, config, iters)?;
    let measured = gc.measured();
    let targets = gc.solution_indices();
    report.plan = Some(PlanInfo {
        prep: gc.plan.prep.label(),
        oracle: gc.plan.oracle.style.label(),
        iterations: gc.plan.iterations,
        search_space: gc.plan.search_space,
        solutions: gc.plan.solutions,
        qubits: gc.circuit.n_qubits(),
        gates: gc.circuit.len(),
        analytic_success: gc.plan.analytic_success(),
    });

    let ideal = run_ideal(&gc.circuit, &measured, sampling.shots, sampling.seed);
    let hit: f64 = targets.iter().map(|&i| ideal.probabilities[i]).sum();
    let summary = summarize(g, k, &ideal.probabilities, &ideal.histogram, (hit, None));
    report.status = if summary.pass { Status::Solved } else { Status::Failed };
    report.ideal = Some(summary);

    if let Some(profile) = noise {
        let run = run_noisy_parallel(&gc.circuit, &measured, &targets, profile, sampling)
            .with_context(|| format!("noise profile {}", profile.name))?;
        report.noisy = Some(NoisyInfo {
            profile: profile.clone(),
            trajectories: run.trajectories,
            outcome: summarize(
                g,
                k,
                &run.mean_probabilities,
                &run.histogram,
                (run.success.mean, Some(run.success.stderr)),
            ),
        });
    }
    Ok(report)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_outcome(out: &mut String, label: &str, o: &OutcomeSummary) {
    let err = o.stderr.map(|e| format!(" ± {e:.6}")).unwrap_or_default();
    let _ = writeln!(
        out,
        "{label}: success {:.6}{err}; top {} -> {} (p = {:.6}) {}",
        o.success_probability,
        o.top.bitstring,
        o.top.nodes,
        o.top.probability,
        pass_word(o.pass)
    );
    let mut rows: Vec<&HistogramRow> = o.histogram.iter().collect();
    rows.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.bitstring.cmp(&b.bitstring)));
    let mut t = Vec::new();
    for r in rows.iter().take(8) {
        t.push(vec![
            format!("  {}", r.bitstring),
            r.count.to_string(),
            format!("{:.4}", r.frequency),
        ]);
    }
    out.push_str(&table(&t));
    if rows.len() > 8 {
        let _ = writeln!(out, "  ... {} more outcomes", rows.len() - 8);
    }
}

impl Report for SolveReport {
    fn command(&self) -> &'static str {
        "solve"
    }

    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["run", "bitstring", "count", "frequency"])?;
        let runs = [
            ("ideal", self.ideal.as_ref()),
            ("noisy", self.noisy.as_ref().map(|n| &n.outcome)),
        ];
        for (name, o) in runs {
            for r in o.iter().flat_map(|o| &o.histogram) {
                w.write_record([name, &r.bitstring, &r.count.to_string(), &r.frequency.to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut String) {
        let g = &self.graph;
        let _ = writeln!(
            out,
            "graph {}: {} nodes, {} edges; k = {}",
            g.source, g.nodes, g.edges, self.k
        );
        if self.status == Status::NoClique {
            let _ = writeln!(out, "no {}-clique exists (brute force); nothing to search", self.k);
            return;
        }
        let _ = writeln!(out, "cliques (brute force): {}", self.cliques.join(" "));
        if let Some(p) = &self.plan {
            let _ = writeln!(
                out,
                "prep {}, oracle {}, iterations {}, N = {}, m = {}, {} qubits, {} gates",
                p.prep, p.oracle, p.iterations, p.search_space, p.solutions, p.qubits, p.gates
            );
            let _ = writeln!(out, "analytic success: {:.6}", p.analytic_success);
        }
        if let Some(o) = &self.ideal {
            write_outcome(out, "ideal", o);
        }
        if let Some(n) = &self.noisy {
            let label = format!(
                "noisy ({}, T1 = {} us, T2 = {} us)",
                n.profile.name, n.profile.t1_us, n.profile.t2_us
            );
            write_outcome(out, &label, &n.outcome);
        }
    }
}

// ---- resources ----

#[derive(Debug, Clone, Serialize)]
pub struct SkippedConfig {
    pub config: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResourcesReport {
    pub graph: GraphInfo,
    pub k: usize,
    pub decomposed: bool,
    pub rows: Vec<ResourceReport>,
    pub skipped: Vec<SkippedConfig>,
}

/// Reports for `configs`. With `skip_invalid`, configurations whose state
/// preparation does not fit `k` are listed as skipped instead of failing.
pub fn resources(
    input: &LoadedGraph,
    k: usize,
    configs: &[Config],
    iters: Iterations,
    decomposed: bool,
    skip_invalid: bool,
) -> anyhow::Result<ResourcesReport> {
    let g = &input.graph;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &c in configs {
        match build(g, k, c, iters) {
            Ok(gc) => rows.push(report(&gc.circuit, ConfigDescriptor::for_grover(&gc, g))),
            Err(e) if skip_invalid && matches!(e.downcast_ref(), Some(GroverError::Prep(_))) => {
                skipped.push(SkippedConfig {
                    config: c.label(),
                    reason: e.to_string(),
                })
            }
            Err(e) => return Err(e.context(format!("configuration {}", c.label()))),
        }
    }
    if rows.is_empty() {
        bail!("no configuration applies to k = {k} on {} nodes", g.node_count());
    }
    Ok(ResourcesReport {
        graph: GraphInfo::of(input),
        k,
        decomposed,
        rows,
        skipped,
    })
}

impl ResourcesReport {
    /// Row label and per-configuration values, as shown in the text table.
    pub fn table_rows(&self) -> Vec<(String, Vec<String>)> {
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        let col = |f: &dyn Fn(&ResourceReport) -> String| self.rows.iter().map(f).collect::<Vec<_>>();
        if self.decomposed {
            for (i, label) in TABLE_ROWS.iter().enumerate() {
                rows.push((label.to_string(), col(&|r| r.table_values()[i].to_string())));
            }
        } else {
            rows.push(("Size".into(), col(&|r| r.size.to_string())));
            rows.push(("Depth".into(), col(&|r| r.depth.to_string())));
            rows.push(("# of Qubits".into(), col(&|r| r.n_qubits.to_string())));
            let mut kinds: Vec<&String> = self.rows.iter().flat_map(|r| r.raw_counts.keys()).collect();
            kinds.sort();
            kinds.dedup();
            for kind in kinds {
                rows.push((
                    kind.clone(),
                    col(&|r| r.raw_counts.get(kind).copied().unwrap_or(0).to_string()),
                ));
            }
        }
        rows.push(("Iterations".into(), col(&|r| r.config.iterations.to_string())));
        rows.push(("Required QV".into(), col(&|r| r.required_qv.to_string())));
        rows.push((
            "Year".into(),
            col(&|r| {
                let y = r.year_estimate;
                if y.clamped {
                    format!("<={}", y.year)
                } else {
                    y.year.to_string()
                }
            }),
        ));
        rows
    }
}

impl Report for ResourcesReport {
    fn command(&self) -> &'static str {
        "resources"
    }

    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record([
            "prep",
            "oracle",
            "nodes",
            "edges",
            "k",
            "iterations",
            "size",
            "depth",
            "n_qubits",
            "decomposed_size",
            "decomposed_depth",
            "decomposed_n_qubits",
            "not",
            "cnot",
            "ccnot",
            "other",
            "required_qv_log2",
            "year",
            "year_clamped",
        ])?;
        for r in &self.rows {
            let c = &r.config;
            w.write_record([
                c.prep.clone(),
                c.oracle.clone(),
                c.nodes.to_string(),
                c.edges.to_string(),
                c.k.to_string(),
                c.iterations.to_string(),
                r.size.to_string(),
                r.depth.to_string(),
                r.n_qubits.to_string(),
                r.decomposed_size.to_string(),
                r.decomposed_depth.to_string(),
                r.decomposed_n_qubits.to_string(),
                r.counts.not.to_string(),
                r.counts.cnot.to_string(),
                r.counts.ccnot.to_string(),
                r.counts.other.to_string(),
                r.required_qv.log2.to_string(),
                r.year_estimate.year.to_string(),
                r.year_estimate.clamped.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut String) {
        let g = &self.graph;
        let stage = if self.decomposed {
            "after lowering"
        } else {
            "before lowering"
        };
        let _ = writeln!(
            out,
            "graph {}: {} nodes, {} edges; k = {}; counts {stage}",
            g.source, g.nodes, g.edges, self.k
        );
        let mut t = vec![std::iter::once(String::new())
            .chain(
                self.rows
                    .iter()
                    .map(|r| format!("{}/{}", r.config.prep, r.config.oracle)),
            )
            .collect::<Vec<_>>()];
        for (label, values) in self.table_rows() {
            t.push(std::iter::once(label).chain(values).collect());
        }
        out.push_str(&table(&t));
        for s in &self.skipped {
            let _ = writeln!(out, "skipped {}: {}", s.config, s.reason);
        }
    }
}

// ---- sweep ----

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub profile: String,
    pub prep: &'static str,
    pub oracle: &'static str,
    pub t1_us: f64,
    pub t2_us: f64,
    pub success_prob: f64,
    pub stderr: f64,
    pub ideal_prob: f64,
    pub trajectories: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub graph: GraphInfo,
    pub k: usize,
    pub rows: Vec<SweepRow>,
}

/// Noisy success probability of every configuration under every profile.
///
/// Every row uses the same seed, so rows differ only through the circuit
/// and the profile.
pub fn sweep(
    input: &LoadedGraph,
    k: usize,
    configs: &[Config],
    iters: Iterations,
    profiles: &[NoiseProfile],
    sampling: Sampling,
) -> anyhow::Result<SweepReport> {
    if profiles.is_empty() {
        bail!("sweep needs at least one noise profile");
    }
    if configs.is_empty() {
        bail!("sweep needs at least one configuration");
    }
    let g = &input.graph;
    let mut rows = Vec::new();
    for &c in configs {
        let gc = build(g, k, c, iters).with_context(|| format!("configuration {}", c.label()))?;
        let measured = gc.measured();
        let targets = gc.solution_indices();
        let ideal = run_ideal(&gc.circuit, &measured, 0, sampling.seed);
        let ideal_prob: f64 = targets.iter().map(|&i| ideal.probabilities[i]).sum();
        for p in profiles {
            let run = run_noisy_parallel(&gc.circuit, &measured, &targets, p, sampling)
                .with_context(|| format!("noise profile {}", p.name))?;
            rows.push(SweepRow {
                profile: p.name.clone(),
                prep: gc.plan.prep.label(),
                oracle: gc.plan.oracle.style.label(),
                t1_us: p.t1_us,
                t2_us: p.t2_us,
                success_prob: run.success.mean,
                stderr: run.success.stderr,
                ideal_prob,
                trajectories: run.trajectories,
            });
        }
    }
    Ok(SweepReport {
        graph: GraphInfo::of(input),
        k,
        rows,
    })
}

impl Report for SweepReport {
    fn command(&self) -> &'static str {
        "sweep"
    }

    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record([
            "profile",
            "prep",
            "oracle",
            "t1_us",
            "t2_us",
            "success_prob",
            "stderr",
            "ideal_prob",
            "trajectories",
        ])?;
        for r in &self.rows {
            w.write_record([
                r.profile.clone(),
                r.prep.into(),
                r.oracle.into(),
                r.t1_us.to_string(),
                r.t2_us.to_string(),
                r.success_prob.to_string(),
                r.stderr.to_string(),
                r.ideal_prob.to_string(),
                r.trajectories.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut String) {
        let g = &self.graph;
        let _ = writeln!(
            out,
            "graph {}: {} nodes, {} edges; k = {}",
            g.source, g.nodes, g.edges, self.k
        );
        let mut t = vec![["profile", "config", "T1 us", "T2 us", "success", "stderr", "ideal"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        for r in &self.rows {
            t.push(vec![
                r.profile.clone(),
                format!("{}/{}", r.prep, r.oracle),
                r.t1_us.to_string(),
                r.t2_us.to_string(),
                format!("{:.5}", r.success_prob),
                format!("{:.5}", r.stderr),
                format!("{:.5}", r.ideal_prob),
            ]);
        }
        out.push_str(&table(&t));
    }
}

// ---- verify ----

#[derive(Debug, Clone, Serialize)]
pub struct CliqueRow {
    pub nodes: String,
    pub bitstring: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub graph: GraphInfo,
    pub k: usize,
    pub count: usize,
    pub cliques: Vec<CliqueRow>,
}

pub fn verify(input: &LoadedGraph, k: usize) -> anyhow::Result<VerifyReport> {
    let n = input.graph.node_count();
    let cliques: Vec<CliqueRow> = find_cliques_bruteforce(&input.graph, k)?
        .iter()
        .map(|c| CliqueRow {
            nodes: c.to_string(),
            bitstring: subset_to_bitstring(c, n).display,
        })
        .collect();
    Ok(VerifyReport {
        graph: GraphInfo::of(input),
        k,
        count: cliques.len(),
        cliques,
    })
}

impl Report for VerifyReport {
    fn command(&self) -> &'static str {
        "verify"
    }

    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["nodes", "bitstring"])?;
        for c in &self.cliques {
            w.write_record([&c.nodes, &c.bitstring])?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut String) {
        let g = &self.graph;
        let _ = writeln!(out, "graph {}: {} nodes, {} edges", g.source, g.nodes, g.edges);
        let _ = writeln!(out, "{} {}-clique(s)", self.count, self.k);
        for c in &self.cliques {
            let _ = writeln!(out, "  {} {}", c.bitstring, c.nodes);
        }
    }
}

// ---- state ----

#[derive(Debug, Clone, Serialize)]
pub struct AmplitudeRow {
    pub index: usize,
    pub bitstring: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct StateReport {
    pub graph: GraphInfo,
    pub k: usize,
    /// `prep` or `final`.
    pub stage: &'static str,
    pub n_qubits: usize,
    pub registers: Vec<Register>,
    pub amplitudes: Vec<AmplitudeRow>,
}

/// Amplitudes after state preparation alone or after the whole search.
/// Zero amplitudes are dropped unless `include_zeros`.
pub fn state(
    input: &LoadedGraph,
    k: usize,
    config: Config,
    iters: Iterations,
    prep_only: bool,
    include_zeros: bool,
) -> anyhow::Result<StateReport> {
    let g = &input.graph;
    let circuit = if prep_only {
        let mode = config.prep.mode(k);
        mode.validate(g.node_count(), k)?;
        mode.circuit(g.node_count())?
    } else {
        build(g, k, config, iters)?.circuit
    };
    let n = circuit.n_qubits();
    if n > 24 {
        bail!("refusing to dump a {n}-qubit state");
    }
    let mut s = StateVector::new(n);
    s.apply_circuit(&circuit);
    let amplitudes = s
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| include_zeros || a.norm_sqr() > 1e-24)
        .map(|(index, a)| AmplitudeRow {
            index,
            bitstring: index_to_bitstring(index, n),
            re: a.re,
            im: a.im,
        })
        .collect();
    Ok(StateReport {
        graph: GraphInfo::of(input),
        k,
        stage: if prep_only { "prep" } else { "final" },
        n_qubits: n,
        registers: circuit.registers().to_vec(),
        amplitudes,
    })
}

impl Report for StateReport {
    fn command(&self) -> &'static str {
        "state"
    }

    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["index", "bitstring", "re", "im"])?;
        for a in &self.amplitudes {
            w.write_record([
                a.index.to_string(),
                a.bitstring.clone(),
                a.re.to_string(),
                a.im.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut String) {
        let regs: Vec<String> = self
            .registers
            .iter()
            .map(|r| format!("{}[{}..{}]", r.name, r.start, r.start + r.len))
            .collect();
        let _ = writeln!(
            out,
            "{} state, {} qubits: {}",
            self.stage,
            self.n_qubits,
            regs.join(" ")
        );
        let mut t = Vec::new();
        for a in &self.amplitudes {
            t.push(vec![
                a.index.to_string(),
                a.bitstring.clone(),
                format!("{:+.6}", a.re),
                format!("{:+.6}", a.im),
            ]);
        }
        out.push_str(&table(&t));
    }
}
