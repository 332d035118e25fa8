//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use kclique_core::grover::Iterations;

use crate::commands::{Config, OracleKind, PrepKind};
use crate::output::Format;
use crate::runner::Sampling;

#[derive(Debug, Parser)]
#[command(
    name = "kclique",
    version,
    about = "Grover search for k-cliques: circuits, resources and noisy simulation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the search circuit, simulate it and decode the answer
    Solve(SolveArgs),
    /// Circuit size, depth, gate mix and quantum-volume estimate
    Resources(ResourcesArgs),
    /// Noisy success probability across noise profiles
    Sweep(SweepArgs),
    /// List k-cliques by brute force
    Verify(VerifyArgs),
    /// Dump state amplitudes
    State(StateArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Bundled graph (g4, g6, star4) or edge-list file
    #[arg(long)]
    pub graph: String,
    /// Clique size
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = PrepKind::Full)]
    pub prep: PrepKind,
    #[arg(long, value_enum, default_value_t = OracleKind::Checking)]
    pub oracle: OracleKind,
    /// Grover iterations: `auto` or a count
    #[arg(long, default_value = "auto", value_parser = parse_iters)]
    pub iters: Iterations,
}

impl SearchArgs {
    pub fn config(&self) -> Config {
        Config {
            prep: self.prep,
            oracle: self.oracle,
        }
    }
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 1024)]
    pub shots: u64,
    /// Monte-Carlo trajectories for noisy runs
    #[arg(long, default_value_t = 1000)]
    pub trajectories: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Apply relaxation only during gates and readout, not while idle
    #[arg(long)]
    pub no_idle: bool,
}

impl SamplingArgs {
    pub fn sampling(&self) -> Sampling {
        Sampling {
            shots: self.shots,
            trajectories: self.trajectories,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; each command has its own default
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Noise profile: builtin device name, T1:T2 in microseconds, or JSON file
    #[arg(long)]
    pub noise: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ResourcesArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Report every prep/oracle combination instead of the selected one
    #[arg(long)]
    pub all: bool,
    /// Show counts after lowering to NOT/CNOT/CCNOT and single-qubit gates
    #[arg(long)]
    pub decompose: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Configurations as prep:oracle; defaults to --prep/--oracle
    #[arg(long, value_delimiter = ',')]
    pub configs: Vec<Config>,
    /// Noise profiles; defaults to the six devices plus 200:200 and 500:500
    #[arg(long, value_delimiter = ',')]
    pub profiles: Vec<String>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Stop after state preparation
    #[arg(long)]
    pub prep_only: bool,
    /// Include zero amplitudes
    #[arg(long)]
    pub all_amplitudes: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_iters(s: &str) -> Result<Iterations, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Iterations::Auto);
    }
    s.parse()
        .map(Iterations::Fixed)
        .map_err(|_| format!("expected `auto` or a non-negative integer, got {s:?}"))
}
