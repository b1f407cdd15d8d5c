//! Benchmark suites.
//!
//! `dichotomy` checks each specialized solver against the oracle on small
//! random instances of its class; `scaling` times the specialized solvers
//! at sizes far beyond the oracle. Every row covers one parameter setting.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::model::{Instance, SolverTag};
use crate::reductions::{random_instance, GeneratorParams, ReductionError};
use crate::solver::{oracle, solve, SolveOptions, SolverChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dichotomy,
    Scaling,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dichotomy" => Ok(Suite::Dichotomy),
            "scaling" => Ok(Suite::Scaling),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

/// One CSV row. In the scaling suite `agreements` counts trials whose
/// committee passed verification, since the oracle cannot run there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub suite: &'static str,
    pub solver: SolverTag,
    pub m: usize,
    pub l: usize,
    pub d: usize,
    pub k: usize,
    pub trials: usize,
    pub agreements: usize,
    pub max_ms: u64,
}

/// A solver with the generator settings it is benchmarked on.
#[derive(Clone, Copy, Debug)]
pub struct Setting {
    pub solver: SolverTag,
    pub params: GeneratorParams,
}

pub fn settings(suite: Suite) -> Vec<Setting> {
    let s = |solver, params| Setting { solver, params };
    match suite {
        Suite::Dichotomy => vec![
            s(SolverTag::TreeDp, GeneratorParams::tree_dp(8, 4, 2, 3, 0)),
            s(SolverTag::TreeDp, GeneratorParams::tree_dp(12, 8, 4, 6, 0)),
            s(SolverTag::ChainDp, GeneratorParams::chain_dp(8, 4, 3, 3, 0)),
            s(SolverTag::ChainDp, GeneratorParams::chain_dp(12, 6, 4, 6, 0)),
            s(SolverTag::Fpt, GeneratorParams::general(8, 4, 2, 3, 2, 0)),
            s(SolverTag::Fpt, GeneratorParams::general(12, 6, 4, 6, 3, 0)),
        ],
        Suite::Scaling => vec![
            s(SolverTag::TreeDp, GeneratorParams::tree_dp(100, 100, 20, 10, 0)),
            s(SolverTag::TreeDp, GeneratorParams::tree_dp(500, 500, 100, 25, 0)),
            s(SolverTag::ChainDp, GeneratorParams::chain_dp(100, 80, 50, 10, 0)),
            s(SolverTag::ChainDp, GeneratorParams::chain_dp(300, 200, 150, 20, 0)),
            s(SolverTag::Fpt, GeneratorParams::general(500, 4, 3, 25, 2, 0)),
        ],
    }
}

/// Seed of trial `t` of a run seeded with `seed`.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(t as u64)
}

/// Runs all trials of a suite. Trials run in parallel; rows come out in
/// setting order.
pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> Result<Vec<BenchRow>, ReductionError> {
    settings(suite)
        .into_iter()
        .map(|setting| run_setting(suite, setting, trials, seed))
        .collect()
}

fn run_setting(suite: Suite, setting: Setting, trials: usize, seed: u64) -> Result<BenchRow, ReductionError> {
    let instances: Vec<Instance> = (0..trials)
        .map(|t| {
            random_instance(&GeneratorParams {
                seed: trial_seed(seed, t),
                ..setting.params
            })
        })
        .collect::<Result<_, _>>()?;
    let outcomes: Vec<(bool, u64)> = instances
        .par_iter()
        .map(|inst| {
            let start = Instant::now();
            let got = solve(inst, SolverChoice::Only(setting.solver), &SolveOptions::default());
            let ms = start.elapsed().as_millis() as u64;
            let ok = match (suite, got) {
                (Suite::Scaling, got) => got.is_ok(),
                (Suite::Dichotomy, Ok(got)) => oracle::solve_exhaustive(inst)
                    .is_ok_and(|want| want.feasible == got.feasible && want.best_profit() == got.best_profit()),
                (Suite::Dichotomy, Err(_)) => false,
            };
            (ok, ms)
        })
        .collect();
    let p = setting.params;
    Ok(BenchRow {
        suite: match suite {
            Suite::Dichotomy => "dichotomy",
            Suite::Scaling => "scaling",
        },
        solver: setting.solver,
        m: p.m,
        l: p.l,
        d: p.d,
        k: p.k,
        trials,
        agreements: outcomes.iter().filter(|(ok, _)| *ok).count(),
        max_ms: outcomes.iter().map(|(_, ms)| *ms).max().unwrap_or(0),
    })
}

pub const CSV_HEADER: [&str; 9] = ["suite", "solver", "m", "l", "d", "k", "trials", "agreements", "max_ms"];

/// Writes the header and one line per row. Rows with zero trials are left
/// out, so an empty run is a header-only file.
pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows.iter().filter(|r| r.trials > 0) {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
