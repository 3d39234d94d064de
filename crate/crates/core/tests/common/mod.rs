#![allow(dead_code)]

use minkbeam::geometry::ConvexPolygon;
use minkbeam::{BeamProblem, ComplexPoint, PhaseSet};
use rand::Rng;
use rand_distr::{Distribution, Normal};
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

pub fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

/// A quadrilateral and a triangle whose sum has seven vertices.
pub fn quadrilateral() -> Vec<ComplexPoint> {
    vec![c(0.4, -0.7), c(0.6, 0.7), c(-0.4, 0.6), c(-0.3, -0.4)]
}

pub fn triangle() -> Vec<ComplexPoint> {
    vec![c(0.2, -0.7), c(0.1, 0.3), c(-0.4, -0.1)]
}

/// Its seven sum vertices, as 0-based (quadrilateral, triangle) index pairs.
pub const QUAD_TRI_TUPLES: [[usize; 2]; 7] = [[0, 0], [1, 0], [1, 1], [2, 1], [2, 2], [3, 2], [3, 0]];

pub fn quad_tri_problem() -> BeamProblem {
    BeamProblem::new(
        vec![c(1.0, 0.0), c(1.0, 0.0)],
        vec![
            PhaseSet::new(quadrilateral()).with_label("P1"),
            PhaseSet::new(triangle()).with_label("P2"),
        ],
    )
    .unwrap()
}

pub fn complex_gaussian<R: Rng>(rng: &mut R) -> ComplexPoint {
    let normal = Normal::new(0.0, FRAC_1_SQRT_2).unwrap();
    c(normal.sample(rng), normal.sample(rng))
}

pub fn random_points<R: Rng>(rng: &mut R, count: usize) -> Vec<ComplexPoint> {
    (0..count).map(|_| complex_gaussian(rng)).collect()
}

/// Small-integer lattice points; sums stay exact and parallel edges are common.
pub fn lattice_points<R: Rng>(rng: &mut R, count: usize, radius: i32) -> Vec<ComplexPoint> {
    (0..count)
        .map(|_| {
            c(
                rng.random_range(-radius..=radius) as f64,
                rng.random_range(-radius..=radius) as f64,
            )
        })
        .collect()
}

/// M-PSK rotated by a random offset.
pub fn offset_psk<R: Rng>(rng: &mut R, m: usize) -> PhaseSet {
    let offset = rng.random_range(0.0..TAU);
    PhaseSet::new(
        (0..m)
            .map(|k| ComplexPoint::from_polar(1.0, offset + TAU * k as f64 / m as f64))
            .collect(),
    )
}

/// `N` Rayleigh channels with uniform `M`-PSK sets.
pub fn rayleigh_psk<R: Rng>(rng: &mut R, n: usize, m: usize) -> BeamProblem {
    let channels = (0..n).map(|_| complex_gaussian(rng)).collect();
    BeamProblem::uniform(channels, PhaseSet::psk(m)).unwrap()
}

/// Same vertex cycle within `tol`, allowing a different start vertex.
pub fn same_polygon(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> bool {
    same_cycle(a.vertices(), b.vertices(), tol)
}

pub fn same_cycle(a: &[ComplexPoint], b: &[ComplexPoint], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    (0..n).any(|shift| (0..n).all(|i| (a[i] - b[(i + shift) % n]).norm() <= tol))
}

/// Every pointwise sum `a_1 + ... + a_N` with one point from each set.
pub fn all_sums(sets: &[Vec<ComplexPoint>]) -> Vec<ComplexPoint> {
    sets.iter().fold(vec![c(0.0, 0.0)], |acc, set| {
        acc.iter()
            .flat_map(|&s| set.iter().map(move |&p| s + p))
            .collect()
    })
}
