use crate::beamforming::{BeamProblem, Method, Solution};
use crate::{Error, Result};

pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 1_000_000;

/// [`brute_force_with_cap`] with [`DEFAULT_BRUTE_FORCE_CAP`].
pub fn brute_force(problem: &BeamProblem) -> Result<Solution> {
    brute_force_with_cap(problem, DEFAULT_BRUTE_FORCE_CAP)
}

/// Exhaustive search over every weight tuple (including the off state in
/// RIS mode). Ties go to the lexicographically smallest tuple, with off
/// ordered before element 0. The returned `vertex_count` is 0.
pub fn brute_force_with_cap(problem: &BeamProblem, cap: u128) -> Result<Solution> {
    problem.validate()?;
    let tuples = problem.tuple_count();
    if tuples > cap {
        return Err(Error::TooLarge { tuples, cap });
    }

    let options: Vec<Vec<Option<usize>>> = problem
        .phase_sets
        .iter()
        .map(|set| {
            let on = (0..set.len()).map(Some);
            if problem.ris_mode {
                std::iter::once(None).chain(on).collect()
            } else {
                on.collect()
            }
        })
        .collect();

    let mut idx = vec![0usize; options.len()];
    let mut current: Vec<Option<usize>> = options.iter().map(|o| o[0]).collect();
    let mut best = current.clone();
    let mut best_val = problem.combine(&current).norm();
    'search: loop {
        let mut n = options.len();
        loop {
            if n == 0 {
                break 'search;
            }
            n -= 1;
            idx[n] += 1;
            if idx[n] < options[n].len() {
                current[n] = options[n][idx[n]];
                break;
            }
            idx[n] = 0;
            current[n] = options[n][0];
        }
        let val = problem.combine(&current).norm();
        if val > best_val {
            best_val = val;
            best.clone_from(&current);
        }
    }
    Ok(Solution::from_choices(problem, best, 0, Method::BruteForce))
}
