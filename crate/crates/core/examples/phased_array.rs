//! Optimal 4-PSK phase configuration for a small array, checked against
//! exhaustive search.

use minkbeam::beamforming::solve;
use minkbeam::oracle::brute_force;
use minkbeam::{BeamProblem, ComplexPoint, PhaseSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use std::time::Instant;

fn main() -> minkbeam::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).unwrap();
    let channels: Vec<ComplexPoint> = (0..8)
        .map(|_| ComplexPoint::new(normal.sample(&mut rng), normal.sample(&mut rng)))
        .collect();
    let problem = BeamProblem::uniform(channels, PhaseSet::psk(4))?;

    let t = Instant::now();
    let best = solve(&problem)?;
    let solve_time = t.elapsed();
    let t = Instant::now();
    let check = brute_force(&problem)?;
    let brute_time = t.elapsed();

    println!("gain          {:.12}", best.gain);
    println!("brute force   {:.12}", check.gain);
    println!("weights       {:?}", best.weight_indices.iter().map(|w| w.unwrap()).collect::<Vec<_>>());
    println!("sum vertices  {} (of {} tuples)", best.vertex_count, problem.tuple_count());
    println!("time          {solve_time:?} vs {brute_time:?}");
    Ok(())
}
