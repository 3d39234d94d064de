//! Timing of the solver against exhaustive search as `N` grows.

use super::gen::{generate, ChannelModel};
use crate::beamforming::solve;
use crate::oracle::brute_force_with_cap;
use crate::Result;
use std::io::{self, Write};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub m: usize,
    pub repeats: usize,
    pub seed: u64,
    /// Brute force is skipped (reported `NA`) above this many tuples.
    pub brute_cap: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// `N * M`, the number of edges to sort.
    pub k: usize,
    pub mean_solve_ms: f64,
    pub mean_brute_ms: Option<f64>,
    pub vertex_count: usize,
}

/// One row per entry of `n_list`. Each timing runs one discarded warm-up
/// followed by `repeats` measured runs on the same Rayleigh instance.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let repeats = config.repeats.max(1);
    config
        .n_list
        .iter()
        .map(|&n| {
            let problem = generate(n, config.m, config.seed, false, ChannelModel::Rayleigh).to_problem()?;
            let (mean_solve_ms, solution) = time_mean(repeats, || solve(&problem))?;
            let mean_brute_ms = if problem.tuple_count() <= config.brute_cap {
                Some(time_mean(repeats, || brute_force_with_cap(&problem, config.brute_cap))?.0)
            } else {
                None
            };
            Ok(BenchRow {
                n,
                k: n * config.m,
                mean_solve_ms,
                mean_brute_ms,
                vertex_count: solution.vertex_count,
            })
        })
        .collect()
}

fn time_mean<T>(repeats: usize, mut f: impl FnMut() -> Result<T>) -> Result<(f64, T)> {
    let mut last = f()?;
    let start = Instant::now();
    for _ in 0..repeats {
        last = std::hint::black_box(f()?);
    }
    Ok((start.elapsed().as_secs_f64() * 1e3 / repeats as f64, last))
}

pub const CSV_HEADER: &str = "N,K,mean_solve_ms,mean_brute_ms,vertex_count";

pub fn write_csv<W: Write>(rows: &[BenchRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let brute = r
            .mean_brute_ms
            .map_or_else(|| "NA".to_string(), |ms| format!("{ms:.6}"));
        writeln!(
            out,
            "{},{},{:.6},{},{}",
            r.n, r.k, r.mean_solve_ms, brute, r.vertex_count
        )?;
    }
    Ok(())
}
