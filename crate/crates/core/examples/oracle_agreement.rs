//! Three independent answers to the same instance: the Minkowski-sum solver,
//! exhaustive search, and the support-function dual with its Thales circles.

use minkbeam::beamforming::{build_summands, solve};
use minkbeam::cli::{generate, ChannelModel};
use minkbeam::oracle::{arc_breakpoints, brute_force, support_solve, thales_residual};

fn main() -> minkbeam::Result<()> {
    for seed in 0..5 {
        let problem = generate(6, 3, seed, seed % 2 == 1, ChannelModel::Rayleigh).to_problem()?;
        let summands = build_summands(&problem)?;
        let a = solve(&problem)?.gain;
        let b = brute_force(&problem)?.gain;
        let dual = support_solve(&summands.polygons)?;
        println!(
            "seed {seed} ris={:<5}  solve {a:.12}  brute {b:.12}  support {:.12}  arcs {}",
            problem.ris_mode, dual.gain, dual.arc_count
        );
    }

    let problem = generate(3, 4, 11, false, ChannelModel::Unit).to_problem()?;
    let summands = build_summands(&problem)?;
    let arcs = arc_breakpoints(&summands.polygons);
    let mut worst: f64 = 0.0;
    for (i, t) in arcs.maximizers.iter().enumerate() {
        let z: minkbeam::ComplexPoint = t.iter().zip(&summands.polygons).map(|(&v, p)| p.vertices()[v]).sum();
        let theta = arcs.angles[i];
        worst = worst.max(thales_residual(z, theta));
    }
    println!("largest Thales residual at the arc boundaries: {worst:.1e}");
    Ok(())
}
