//! Uniform M-PSK: the rotational symmetry of the sum polygon lets one
//! sector of N edges stand in for all N*M.

use minkbeam::beamforming::{psk_fast_path, solve};
use minkbeam::cli::{generate, ChannelModel};
use std::time::Instant;

fn main() -> minkbeam::Result<()> {
    for (n, m) in [(1_000, 8), (20_000, 16), (100_000, 4)] {
        let problem = generate(n, m, 7, false, ChannelModel::Rayleigh).to_problem()?;
        let t = Instant::now();
        let general = solve(&problem)?;
        let t_general = t.elapsed();
        let t = Instant::now();
        let fast = psk_fast_path(&problem)?;
        let t_fast = t.elapsed();
        println!(
            "N={n:>6} M={m:>2}  gain {:.9} / {:.9}  vertices {}  general {t_general:>10.2?}  fast {t_fast:>10.2?}",
            general.gain, fast.gain, fast.vertex_count
        );
    }
    Ok(())
}
