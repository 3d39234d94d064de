//! Amplitude-controllable RIS elements.
//!
//! An element that can scale its reflection by `t` in `[0, 1]` has the
//! admissible set `{t w : t in [0, 1], w in S}`, whose hull equals
//! `conv({0} ∪ S)`. Solving the discrete problem over `{0} ∪ S` is therefore
//! already optimal for the continuous one.

use super::{solve, BeamProblem};
use crate::ComplexPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Amplitude levels per element in the sampling grid: `t = k / (STEPS - 1)`.
pub const RIS_T_STEPS: usize = 32;

/// Grids larger than this are sampled instead of enumerated.
pub const RIS_GRID_CAP: u64 = 1 << 16;

const GRID_SEED: u64 = 0x5EED;

/// One-sided sampling check that the augmented discrete optimum dominates
/// the continuous amplitude-controllable problem.
///
/// `problem.phase_sets` are the base sets `S_n`; `ris_mode` is ignored. Each
/// element's continuous set is sampled on the grid `{t w}` with
/// [`RIS_T_STEPS`] amplitudes. The grid is enumerated when its size is at
/// most [`RIS_GRID_CAP`] and otherwise sampled with a fixed seed. Returns
/// `true` iff no sample beats the augmented gain by more than `1e-9`
/// (relative, floored at 1).
pub fn ris_equivalence_check(problem: &BeamProblem) -> bool {
    let augmented = problem.clone().with_ris_mode(true);
    let Ok(solution) = solve(&augmented) else {
        return false;
    };
    let bound = solution.gain + 1e-9 * solution.gain.max(1.0);

    let options: Vec<Vec<ComplexPoint>> = problem
        .channels
        .iter()
        .zip(&problem.phase_sets)
        .map(|(&h, set)| {
            let mut opts = vec![ComplexPoint::new(0.0, 0.0)];
            for k in 1..RIS_T_STEPS {
                let t = k as f64 / (RIS_T_STEPS - 1) as f64;
                opts.extend(set.elements.iter().map(|&w| w * t * h));
            }
            opts
        })
        .collect();

    let grid_size = options
        .iter()
        .try_fold(1u64, |acc, o| acc.checked_mul(o.len() as u64));
    let beats = |idx: &[usize]| -> bool {
        let z = idx
            .iter()
            .zip(&options)
            .fold(problem.direct_gain, |z, (&i, o)| z + o[i]);
        z.norm() > bound
    };

    match grid_size {
        Some(size) if size <= RIS_GRID_CAP => {
            let mut idx = vec![0usize; options.len()];
            loop {
                if beats(&idx) {
                    return false;
                }
                // odometer, last antenna fastest
                let mut n = options.len();
                loop {
                    if n == 0 {
                        return true;
                    }
                    n -= 1;
                    idx[n] += 1;
                    if idx[n] < options[n].len() {
                        break;
                    }
                    idx[n] = 0;
                }
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(GRID_SEED);
            let mut idx = vec![0usize; options.len()];
            for _ in 0..RIS_GRID_CAP {
                for (slot, o) in idx.iter_mut().zip(&options) {
                    *slot = rng.random_range(0..o.len());
                }
                if beats(&idx) {
                    return false;
                }
            }
            true
        }
    }
}
