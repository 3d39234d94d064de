//! Monotone-chain convex hull.

use super::{cross, is_finite, ConvexPolygon};
use crate::{ComplexPoint, Error, Result};
use std::cmp::Ordering;

/// Convex hull of a finite point set as a canonical polygon.
///
/// Interior points and points on the interior of a hull edge are dropped.
/// When several input points coincide, the vertex's provenance is the
/// smallest of their indices.
pub fn convex_hull(points: &[ComplexPoint]) -> Result<ConvexPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if !points.iter().all(|&p| is_finite(p)) {
        return Err(Error::NonFinite);
    }
    let idx = hull_indices(points);
    Ok(ConvexPolygon::from_parts(
        idx.iter().map(|&i| points[i]).collect(),
        idx,
    ))
}

/// Canonical form of a convex vertex list given in any rotation or
/// orientation, possibly with duplicate or collinear vertices. Provenance
/// indexes the input list.
pub fn canonicalize(vertices: &[ComplexPoint]) -> Result<ConvexPolygon> {
    convex_hull(vertices)
}

/// Indices of the hull vertices of `points` in canonical order.
/// `points` must be nonempty and finite.
pub(crate) fn hull_indices(points: &[ComplexPoint]) -> Vec<usize> {
    let by_coords = |a: &usize, b: &usize| -> Ordering {
        let (p, q) = (points[*a], points[*b]);
        p.re.partial_cmp(&q.re)
            .unwrap()
            .then(p.im.partial_cmp(&q.im).unwrap())
    };
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|a, b| by_coords(a, b).then(a.cmp(b)));
    order.dedup_by(|cur, prev| points[*cur] == points[*prev]);

    if order.len() < 3 {
        return rotate_to_start(order, points);
    }

    let mut hull: Vec<usize> = Vec::with_capacity(order.len() + 1);
    for &i in &order {
        while hull.len() >= 2
            && cross(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], points[i]) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], points[i]) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    // the upper chain ends where the lower one started
    hull.pop();
    rotate_to_start(hull, points)
}

fn rotate_to_start(mut ring: Vec<usize>, points: &[ComplexPoint]) -> Vec<usize> {
    let start = (0..ring.len())
        .min_by(|&a, &b| {
            let (p, q) = (points[ring[a]], points[ring[b]]);
            p.im.partial_cmp(&q.im)
                .unwrap()
                .then(p.re.partial_cmp(&q.re).unwrap())
        })
        .unwrap_or(0);
    ring.rotate_left(start);
    ring
}
