//! Solve time against exhaustive search as the array grows.

use minkbeam::cli::{run_bench, write_csv, BenchConfig};

fn main() -> minkbeam::Result<()> {
    let rows = run_bench(&BenchConfig {
        n_list: vec![4, 8, 10, 100, 1_000, 10_000, 100_000],
        m: 4,
        repeats: 3,
        seed: 0,
        brute_cap: 1_000_000,
    })?;
    write_csv(&rows, std::io::stdout().lock()).expect("stdout");
    Ok(())
}
