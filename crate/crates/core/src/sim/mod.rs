//! Ideal statevector execution and Monte-Carlo thermal-relaxation
//! trajectories.
//!
//! All randomness comes from ChaCha8. Ideal runs seed one generator with
//! `seed`. Noisy runs give trajectory `i` its own substream: the generator
//! seeded with `seed` and switched to stream `i`
//! (`ChaCha8Rng::seed_from_u64(seed)` then `set_stream(i)`). Trajectory
//! results are aggregated in index order, so a run is reproducible no matter
//! how trajectories are spread over workers.

mod noise;
mod state;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use noise::{
    gate_duration_ns, relaxation_channel, ChannelImpl, GateDurations, NoiseError, NoiseProfile, RelaxationChannel,
    DEFAULT_READOUT_NS,
};
pub use state::StateVector;

use crate::circuit::Circuit;
use crate::graph::index_to_bitstring;

/// Sampled measurement counts over a fixed list of qubits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MeasurementHistogram {
    pub shots: u64,
    /// Measured qubits; the last one is printed leftmost in keys.
    pub qubits: Vec<usize>,
    pub counts: BTreeMap<String, u64>,
}

impl MeasurementHistogram {
    fn from_outcomes(qubits: &[usize], outcomes: impl IntoIterator<Item = usize>) -> Self {
        let mut by_index: BTreeMap<usize, u64> = BTreeMap::new();
        let mut shots = 0;
        for o in outcomes {
            *by_index.entry(o).or_insert(0) += 1;
            shots += 1;
        }
        Self {
            shots,
            qubits: qubits.to_vec(),
            counts: by_index
                .into_iter()
                .map(|(i, c)| (index_to_bitstring(i, qubits.len()), c))
                .collect(),
        }
    }

    pub fn count(&self, bits: &str) -> u64 {
        self.counts.get(bits).copied().unwrap_or(0)
    }

    /// Observed frequency of `bits`.
    pub fn success_probability(&self, bits: &str) -> f64 {
        if self.shots == 0 {
            0.0
        } else {
            self.count(bits) as f64 / self.shots as f64
        }
    }

    /// Most frequent outcome; ties go to the smallest bitstring.
    pub fn top(&self) -> Option<(&str, u64)> {
        self.counts
            .iter()
            .fold(None, |best: Option<(&str, u64)>, (k, &c)| match best {
                Some((_, bc)) if bc >= c => best,
                _ => Some((k.as_str(), c)),
            })
    }
}

/// Draws `shots` outcomes from a discrete distribution.
fn sample<R: Rng>(probs: &[f64], shots: u64, rng: &mut R) -> Vec<usize> {
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in probs {
        acc += p;
        cdf.push(acc);
    }
    let total = acc;
    (0..shots)
        .map(|_| {
            let r = rng.gen::<f64>() * total;
            cdf.partition_point(|&c| c <= r).min(probs.len() - 1)
        })
        .collect()
}

/// Result of [`run_ideal`].
#[derive(Debug, Clone)]
pub struct IdealRun {
    pub histogram: MeasurementHistogram,
    /// Exact outcome distribution over the measured qubits.
    pub probabilities: Vec<f64>,
    pub state: StateVector,
}

impl IdealRun {
    pub fn probability(&self, bits: &str) -> f64 {
        crate::graph::bitstring_to_index(bits)
            .and_then(|i| self.probabilities.get(i).copied())
            .unwrap_or(0.0)
    }
}

/// Runs `circuit` from `|0...0>` and samples `shots` measurements of
/// `measured`.
pub fn run_ideal(circuit: &Circuit, measured: &[usize], shots: u64, seed: u64) -> IdealRun {
    let mut state = StateVector::new(circuit.n_qubits());
    state.apply_circuit(circuit);
    let probabilities = state.marginal(measured);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcomes = sample(&probabilities, shots, &mut rng);
    IdealRun {
        histogram: MeasurementHistogram::from_outcomes(measured, outcomes),
        probabilities,
        state,
    }
}

/// A circuit bound to a noise profile, ready for trajectory sampling.
#[derive(Debug, Clone)]
pub struct NoisyProgram<'a> {
    circuit: &'a Circuit,
    measured: Vec<usize>,
    profile: NoiseProfile,
    imp: ChannelImpl,
    durations: Vec<f64>,
}

/// What one trajectory produced.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryOutcome {
    /// Exact outcome distribution of the trajectory's final state.
    pub probabilities: Vec<f64>,
    pub samples: Vec<usize>,
}

impl<'a> NoisyProgram<'a> {
    pub fn new(circuit: &'a Circuit, measured: &[usize], profile: &NoiseProfile) -> Result<Self, NoiseError> {
        Self::with_impl(circuit, measured, profile, profile.preferred_impl())
    }

    pub fn with_impl(
        circuit: &'a Circuit,
        measured: &[usize],
        profile: &NoiseProfile,
        imp: ChannelImpl,
    ) -> Result<Self, NoiseError> {
        profile.validate()?;
        if imp == ChannelImpl::Mixture && profile.t2_us > profile.t1_us {
            return Err(NoiseError::MixtureNeedsT2BelowT1);
        }
        let durations = circuit
            .ops()
            .iter()
            .map(|g| gate_duration_ns(g, &profile.gate_ns))
            .collect();
        Ok(Self {
            circuit,
            measured: measured.to_vec(),
            profile: profile.clone(),
            imp,
            durations,
        })
    }

    pub fn measured(&self) -> &[usize] {
        &self.measured
    }

    /// Wall time of the ASAP schedule, readout excluded.
    pub fn duration_ns(&self) -> f64 {
        let mut i = 0;
        self.circuit
            .schedule(|_| {
                i += 1;
                self.durations[i - 1]
            })
            .makespan
    }

    /// Generator for trajectory `index`.
    pub fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        rng
    }

    /// Runs trajectory `index` and draws `shots` samples from its final
    /// state.
    pub fn trajectory(&self, index: u64, seed: u64, shots: u64) -> TrajectoryOutcome {
        let mut rng = Self::trajectory_rng(seed, index);
        let n = self.circuit.n_qubits();
        let mut state = StateVector::new(n);
        let mut clock = alloc::vec![0.0f64; n];
        let relax = |state: &mut StateVector, q: usize, t: f64, rng: &mut ChaCha8Rng| {
            if t > 0.0 {
                relaxation_channel(t, &self.profile)
                    .apply_trajectory(state, q, self.imp, rng)
                    .expect("unravelling checked at construction");
            }
        };

        for (g, &d) in self.circuit.ops().iter().zip(&self.durations) {
            let start = g.qubits().iter().map(|&q| clock[q]).fold(0.0, f64::max);
            if self.profile.apply_idle {
                for &q in g.qubits() {
                    relax(&mut state, q, start - clock[q], &mut rng);
                }
            }
            state.apply_gate(g);
            for &q in g.qubits() {
                relax(&mut state, q, d, &mut rng);
                clock[q] = start + d;
            }
        }
        let end = clock.iter().copied().fold(0.0, f64::max);
        for (q, &t) in clock.iter().enumerate() {
            if self.profile.apply_idle {
                relax(&mut state, q, end - t, &mut rng);
            }
            relax(&mut state, q, self.profile.readout_ns, &mut rng);
        }

        let probabilities = state.marginal(&self.measured);
        let samples = sample(&probabilities, shots, &mut rng);
        TrajectoryOutcome { probabilities, samples }
    }

    /// Shots assigned to trajectory `index` when `shots` are spread over
    /// `trajectories` as evenly as possible.
    pub fn shots_for(index: u64, shots: u64, trajectories: u64) -> u64 {
        shots / trajectories + u64::from(index < shots % trajectories)
    }
}

/// Aggregate of a noisy run.
#[derive(Debug, Clone, PartialEq)]
pub struct NoisyRun {
    pub histogram: MeasurementHistogram,
    pub trajectories: u64,
    /// Trajectory-averaged outcome distribution.
    pub mean_probabilities: Vec<f64>,
    /// Per-outcome sum of squared trajectory probabilities, for error bars.
    sum_sq: Vec<f64>,
    /// Trajectory-averaged probability of landing in the target set.
    pub success: Estimate,
}

/// Mean and standard error of a trajectory average.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
}

impl NoisyRun {
    /// Folds trajectory outcomes, which must arrive in index order.
    /// `targets` are outcome indices whose combined probability becomes
    /// [`NoisyRun::success`].
    pub fn aggregate(
        measured: &[usize],
        targets: &[usize],
        outcomes: impl IntoIterator<Item = TrajectoryOutcome>,
    ) -> Self {
        let width = 1 << measured.len();
        let mut sum = alloc::vec![0.0; width];
        let mut sum_sq = alloc::vec![0.0; width];
        let (mut hit, mut hit_sq) = (0.0, 0.0);
        let mut samples = Vec::new();
        let mut trajectories = 0u64;
        for o in outcomes {
            for (i, p) in o.probabilities.iter().enumerate() {
                sum[i] += p;
                sum_sq[i] += p * p;
            }
            let h: f64 = targets.iter().filter_map(|&i| o.probabilities.get(i)).sum();
            hit += h;
            hit_sq += h * h;
            samples.extend(o.samples);
            trajectories += 1;
        }
        let t = trajectories.max(1) as f64;
        Self {
            histogram: MeasurementHistogram::from_outcomes(measured, samples),
            trajectories,
            mean_probabilities: sum.iter().map(|s| s / t).collect(),
            sum_sq,
            success: mean_and_stderr(hit, hit_sq, trajectories),
        }
    }

    /// Trajectory-averaged probability of `bits`, with its standard error.
    pub fn estimate(&self, bits: &str) -> Estimate {
        let Some(i) = crate::graph::bitstring_to_index(bits).filter(|&i| i < self.mean_probabilities.len()) else {
            return Estimate { mean: 0.0, stderr: 0.0 };
        };
        let t = self.trajectories as f64;
        mean_and_stderr(self.mean_probabilities[i] * t, self.sum_sq[i], self.trajectories)
    }
}

fn mean_and_stderr(sum: f64, sum_sq: f64, n: u64) -> Estimate {
    if n == 0 {
        return Estimate { mean: 0.0, stderr: 0.0 };
    }
    let t = n as f64;
    let mean = sum / t;
    let var = if n > 1 {
        ((sum_sq / t - mean * mean) * t / (t - 1.0)).max(0.0)
    } else {
        0.0
    };
    Estimate {
        mean,
        stderr: libm::sqrt(var / t),
    }
}

/// Sequential trajectory simulation of `circuit` under `profile`.
///
/// `targets` are the measured outcome indices counted as success.
pub fn run_noisy(
    circuit: &Circuit,
    measured: &[usize],
    targets: &[usize],
    profile: &NoiseProfile,
    shots: u64,
    trajectories: u64,
    seed: u64,
) -> Result<NoisyRun, NoiseError> {
    let program = NoisyProgram::new(circuit, measured, profile)?;
    let trajectories = trajectories.max(1);
    Ok(NoisyRun::aggregate(
        measured,
        targets,
        (0..trajectories).map(|i| program.trajectory(i, seed, NoisyProgram::shots_for(i, shots, trajectories))),
    ))
}
