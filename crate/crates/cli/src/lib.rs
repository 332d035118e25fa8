//! Command-line front end for `kclique-core`: graph and profile loading,
//! parallel noisy runs, and JSON/CSV/text reports.

pub mod args;
pub mod commands;
pub mod input;
pub mod output;
pub mod profiles;
pub mod runner;

use std::io::Write;

use anyhow::Context;
use kclique_core::NoiseProfile;

use args::{Cli, Command, OutputArgs};
use commands::Config;
use output::{render, Format, Report};

fn emit<R: Report>(report: &R, output: &OutputArgs, default: Format, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let text = render(report, output.format.unwrap_or(default))?;
    match &output.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => stdout.write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn with_idle(mut p: NoiseProfile, no_idle: bool) -> NoiseProfile {
    if no_idle {
        p.apply_idle = false;
    }
    p
}

/// Runs a parsed command line, writing the report to `stdout` or `--out`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match cli.command {
        Command::Solve(a) => {
            let g = input::load_graph(&a.graph.graph)?;
            let noise = a
                .noise
                .as_deref()
                .map(profiles::resolve)
                .transpose()?
                .map(|p| with_idle(p, a.sampling.no_idle));
            let r = commands::solve(
                &g,
                a.graph.k,
                a.search.config(),
                a.search.iters,
                a.sampling.sampling(),
                noise.as_ref(),
            )?;
            emit(&r, &a.output, Format::Text, stdout)
        }
        Command::Resources(a) => {
            let g = input::load_graph(&a.graph.graph)?;
            let configs = if a.all { Config::all() } else { vec![a.search.config()] };
            let r = commands::resources(&g, a.graph.k, &configs, a.search.iters, a.decompose, a.all)?;
            emit(&r, &a.output, Format::Text, stdout)
        }
        Command::Sweep(a) => {
            let g = input::load_graph(&a.graph.graph)?;
            let configs = if a.configs.is_empty() {
                vec![a.search.config()]
            } else {
                a.configs.clone()
            };
            let list = if a.profiles.is_empty() {
                profiles::sweep_default()
            } else {
                a.profiles
                    .iter()
                    .map(|s| profiles::resolve(s))
                    .collect::<Result<_, _>>()?
            };
            let list: Vec<NoiseProfile> = list.into_iter().map(|p| with_idle(p, a.sampling.no_idle)).collect();
            let r = commands::sweep(&g, a.graph.k, &configs, a.search.iters, &list, a.sampling.sampling())?;
            emit(&r, &a.output, Format::Csv, stdout)
        }
        Command::Verify(a) => {
            let g = input::load_graph(&a.graph.graph)?;
            let r = commands::verify(&g, a.graph.k)?;
            emit(&r, &a.output, Format::Text, stdout)
        }
        Command::State(a) => {
            let g = input::load_graph(&a.graph.graph)?;
            let r = commands::state(
                &g,
                a.graph.k,
                a.search.config(),
                a.search.iters,
                a.prep_only,
                a.all_amplitudes,
            )?;
            emit(&r, &a.output, Format::Csv, stdout)
        }
    }
}
