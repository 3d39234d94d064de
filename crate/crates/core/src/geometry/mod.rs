//! Planar convex geometry over the complex plane.
//!
//! Every [`ConvexPolygon`] is kept in one canonical form: vertices strictly
//! counterclockwise, no duplicates, no collinear runs, and the list starts at
//! the vertex with the smallest imaginary part (smallest real part on ties).
//! With that start rule the edge directions of a polygon come out sorted in
//! `[0, 2pi)`, which is what the Minkowski edge merge relies on.

mod hull;
mod minkowski;
mod polygon;

pub use hull::{canonicalize, convex_hull};
pub use minkowski::{minkowski_sum, MinkowskiSum, VertexProvenance};
pub use polygon::{edge_angles, ConvexPolygon, EdgeRecord};

pub(crate) use polygon::CompensatedPoint;

use crate::ComplexPoint;

/// Edges whose directions differ by at most this many radians are treated
/// as parallel and merged.
pub const PARALLEL_TOLERANCE: f64 = 1e-12;

/// Direction of `v` in `[0, 2pi)`.
///
/// Directions just below the positive real axis stay just below `2pi`
/// instead of wrapping to zero, so that a canonical polygon's closing edge
/// always sorts last.
pub fn direction_angle(v: ComplexPoint) -> f64 {
    let a = v.im.atan2(v.re);
    if a >= 0.0 {
        // atan2 may return -0.0
        a.abs()
    } else {
        let wrapped = a + std::f64::consts::TAU;
        if wrapped >= std::f64::consts::TAU {
            f64::from_bits(std::f64::consts::TAU.to_bits() - 1)
        } else {
            wrapped
        }
    }
}

pub(crate) fn is_finite(z: ComplexPoint) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Twice the signed area of the triangle `(o, a, b)`; positive for a left turn.
pub(crate) fn cross(o: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> f64 {
    let u = a - o;
    let v = b - o;
    u.re * v.im - u.im * v.re
}
