//! Discrete beamforming as a Minkowski sum.
//!
//! The reachable set `h0 + h_1 S_1 + ... + h_N S_N` has the same convex hull
//! as `h0 + h_1 conv(S_1) + ... + h_N conv(S_N)`, and the modulus, being
//! convex, peaks at a vertex of that polygon. [`solve`] builds the summands,
//! sums them, and scans the at most `sum_n |S_n|` vertices.

mod problem;
mod psk;
mod ris;

pub use problem::{psk_element, BeamProblem, Method, PhaseSet, Solution};
pub use psk::{psk_fast_path, PSK_TOLERANCE};
pub use ris::{ris_equivalence_check, RIS_GRID_CAP, RIS_T_STEPS};

use crate::geometry::{convex_hull, minkowski_sum, ConvexPolygon};
use crate::{ComplexPoint, Result};

/// Scaled hull polygons of a problem plus, for each antenna, the weight
/// choice behind every vertex of its polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct Summands {
    /// `h_n * conv(S_n')` for each antenna, then `{h0}` if `h0 != 0`.
    pub polygons: Vec<ConvexPolygon>,
    /// `choices[n][v]` is the element index of set `n` at vertex `v` of
    /// `polygons[n]`; `None` is the RIS off state.
    pub choices: Vec<Vec<Option<usize>>>,
}

impl Summands {
    pub fn antenna_count(&self) -> usize {
        self.choices.len()
    }

    /// Maps a sum-polygon index tuple back to per-antenna weight choices.
    pub fn weight_choices(&self, tuple: &[usize]) -> Vec<Option<usize>> {
        self.choices
            .iter()
            .zip(tuple)
            .map(|(c, &v)| c[v])
            .collect()
    }
}

/// One summand per antenna, `h_n * conv(S_n')` where `S_n' = S_n`, or
/// `{0} ∪ S_n` in RIS mode, followed by the point `{h0}` when `h0 != 0`.
///
/// A zero channel gives the point `{0}` and reports element 0.
pub fn build_summands(problem: &BeamProblem) -> Result<Summands> {
    problem.validate()?;
    let zero = ComplexPoint::new(0.0, 0.0);
    let n = problem.antenna_count();
    let mut polygons = Vec::with_capacity(n + 1);
    let mut choices = Vec::with_capacity(n);

    // uniform problems repeat one set, so its hull is reused across antennas
    let mut base: Option<(&PhaseSet, ConvexPolygon)> = None;
    for (&h, set) in problem.channels.iter().zip(&problem.phase_sets) {
        if h == zero {
            polygons.push(ConvexPolygon::point(zero)?);
            choices.push(vec![Some(0)]);
            continue;
        }
        let hull = match &base {
            Some((prev, hull)) if prev.elements == set.elements => hull,
            _ => {
                let hull = if problem.ris_mode {
                    let mut augmented = Vec::with_capacity(set.len() + 1);
                    augmented.push(zero);
                    augmented.extend_from_slice(&set.elements);
                    convex_hull(&augmented)?
                } else {
                    convex_hull(&set.elements)?
                };
                &base.insert((set, hull)).1
            }
        };
        let scaled = hull.scale(h)?;
        let offset = usize::from(problem.ris_mode);
        choices.push(
            scaled
                .provenance()
                .iter()
                .map(|&i| i.checked_sub(offset))
                .collect(),
        );
        polygons.push(scaled);
    }
    if problem.direct_gain != zero {
        polygons.push(ConvexPolygon::point(problem.direct_gain)?);
    }
    Ok(Summands { polygons, choices })
}

/// Globally optimal weights by vertex enumeration of the Minkowski sum.
///
/// Ties between equal-modulus vertices go to the first vertex in canonical
/// order.
pub fn solve(problem: &BeamProblem) -> Result<Solution> {
    let summands = build_summands(problem)?;
    let sum = minkowski_sum(&summands.polygons)?;
    let best = argmax_modulus(sum.polygon.vertices());
    let tuple = sum.provenance.tuple(best);
    Ok(Solution::from_choices(
        problem,
        summands.weight_choices(&tuple),
        sum.polygon.len(),
        Method::General,
    ))
}

fn argmax_modulus(points: &[ComplexPoint]) -> usize {
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for (k, z) in points.iter().enumerate() {
        let v = z.norm_sqr();
        if v > best_val {
            best_val = v;
            best = k;
        }
    }
    best
}
