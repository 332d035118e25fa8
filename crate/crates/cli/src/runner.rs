//! Parallel trajectory execution.
//!
//! Trajectories run on the rayon pool but are collected in index order
//! before aggregation, so results do not depend on the number of workers.

use kclique_core::sim::{NoiseError, NoisyProgram, NoisyRun};
use kclique_core::{Circuit, NoiseProfile};
use rayon::prelude::*;

/// Shot, trajectory and seed settings of a noisy run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub shots: u64,
    pub trajectories: u64,
    pub seed: u64,
}

/// Same result as [`kclique_core::sim::run_noisy`], computed in parallel.
pub fn run_noisy_parallel(
    circuit: &Circuit,
    measured: &[usize],
    targets: &[usize],
    profile: &NoiseProfile,
    sampling: Sampling,
) -> Result<NoisyRun, NoiseError> {
    let program = NoisyProgram::new(circuit, measured, profile)?;
    let t = sampling.trajectories.max(1);
    let outcomes: Vec<_> = (0..t)
        .into_par_iter()
        .map(|i| program.trajectory(i, sampling.seed, NoisyProgram::shots_for(i, sampling.shots, t)))
        .collect();
    Ok(NoisyRun::aggregate(measured, targets, outcomes))
}
