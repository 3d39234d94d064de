//! Shortcut for identical uniform M-PSK sets.
//!
//! With every set equal to the `M`-th roots of unity, `h_n S` is a regular
//! `M`-gon whose edge directions are `arg(h_n) + pi/2 + pi/M + 2 pi m / M`.
//! The sum polygon is therefore invariant under rotation by `2 pi / M`: its
//! edge list is `M` rotated copies of the `N` edges whose directions fall in
//! `[0, 2 pi / M)`. Walking one such sector visits, up to rotation, every
//! vertex modulus, so only `N` edges are sorted and `N` vertices evaluated.

use super::problem::psk_element;
use super::{BeamProblem, Method, Solution};
use crate::geometry::{CompensatedPoint, PARALLEL_TOLERANCE};
use crate::{ComplexPoint, Error, Result};
use std::f64::consts::{PI, TAU};

/// Maximum distance between a set element and its root of unity.
pub const PSK_TOLERANCE: f64 = 1e-12;

/// Same answer as [`super::solve`] for uniform M-PSK instances in
/// `O(N log N)`.
///
/// Fails with [`Error::NotUniformPsk`] unless every set is a permutation of
/// the same `M` roots of unity, `h0 = 0`, and RIS mode is off. It does not
/// fall back to the general solver.
pub fn psk_fast_path(problem: &BeamProblem) -> Result<Solution> {
    problem.validate()?;
    if problem.ris_mode {
        return Err(Error::NotUniformPsk("RIS mode adds the off state".into()));
    }
    if problem.direct_gain != ComplexPoint::new(0.0, 0.0) {
        return Err(Error::NotUniformPsk("nonzero direct gain".into()));
    }
    let m = problem.phase_sets[0].len();
    // root_to_element[n][k] = index in set n of e^{j 2 pi k / M}
    let root_to_element = problem
        .phase_sets
        .iter()
        .enumerate()
        .map(|(n, set)| {
            if set.len() != m {
                return Err(Error::NotUniformPsk(format!(
                    "set {n} has {} elements, set 0 has {m}",
                    set.len()
                )));
            }
            match_roots(&set.elements)
                .ok_or_else(|| Error::NotUniformPsk(format!("set {n} is not the {m}-th roots of unity")))
        })
        .collect::<Result<Vec<_>>>()?;

    let n_ant = problem.antenna_count();
    let zero = ComplexPoint::new(0.0, 0.0);
    let mut root = vec![0usize; n_ant];
    let mut sector_edges: Vec<(f64, usize)> = Vec::with_capacity(n_ant);

    if m > 1 {
        let sector = TAU / m as f64;
        let edge_offset = PI / 2.0 + PI / m as f64;
        for (n, &h) in problem.channels.iter().enumerate() {
            if h == zero {
                continue;
            }
            // edge k of h*S leaves vertex h*w^k with direction
            // arg(h) + edge_offset + k * sector
            let t = (h.arg() + edge_offset) / sector;
            let mut whole = t.floor();
            let mut frac = t - whole;
            if frac >= 1.0 {
                frac -= 1.0;
                whole += 1.0;
            }
            root[n] = (-(whole as i64)).rem_euclid(m as i64) as usize;
            sector_edges.push((frac, n));
        }
    }
    sector_edges.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let element = |n: usize, k: usize| problem.phase_sets[n].elements[root_to_element[n][k]];

    let mut acc = CompensatedPoint::default();
    for (n, &h) in problem.channels.iter().enumerate() {
        acc.add(element(n, root[n]) * h);
    }
    let mut best_step = 0;
    let mut best_val = acc.value().norm_sqr();
    let last = sector_edges.len().saturating_sub(1);
    for (step, &(_, n)) in sector_edges[..last].iter().enumerate() {
        let h = problem.channels[n];
        let next = (root[n] + 1) % m;
        acc.sub(element(n, root[n]) * h);
        acc.add(element(n, next) * h);
        root[n] = next;
        let val = acc.value().norm_sqr();
        if val > best_val {
            best_val = val;
            best_step = step + 1;
        }
    }
    // rewind: replay only the winning prefix from the sector start
    for &(_, n) in sector_edges[..last].iter().rev() {
        root[n] = (root[n] + m - 1) % m;
    }
    for &(_, n) in &sector_edges[..best_step] {
        root[n] = (root[n] + 1) % m;
    }

    let choices = (0..n_ant)
        .map(|n| {
            if problem.channels[n] == zero {
                Some(0)
            } else {
                Some(root_to_element[n][root[n]])
            }
        })
        .collect();
    Ok(Solution::from_choices(
        problem,
        choices,
        sector_vertex_count(&sector_edges, m),
        Method::PskFastPath,
    ))
}

/// Vertex count of the full sum polygon: `M` copies of the distinct sector
/// directions.
fn sector_vertex_count(sorted: &[(f64, usize)], m: usize) -> usize {
    if sorted.is_empty() {
        return 1;
    }
    let distinct = 1 + sorted
        .windows(2)
        .filter(|w| w[1].0 - w[0].0 > PARALLEL_TOLERANCE / (TAU / m as f64))
        .count();
    distinct * m
}

/// For each root index `k`, the position of `e^{j 2 pi k / M}` in `elements`.
fn match_roots(elements: &[ComplexPoint]) -> Option<Vec<usize>> {
    let m = elements.len();
    let mut slots = vec![usize::MAX; m];
    for (i, &w) in elements.iter().enumerate() {
        let k = (w.arg() / (TAU / m as f64)).round().rem_euclid(m as f64) as usize % m;
        if (w - psk_element(k, m)).norm() > PSK_TOLERANCE || slots[k] != usize::MAX {
            return None;
        }
        slots[k] = i;
    }
    Some(slots)
}
