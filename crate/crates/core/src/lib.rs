//! Globally optimal discrete beamforming.
//!
//! The gain `|h0 + sum_n w_n h_n|` with each weight `w_n` drawn from a finite
//! set is maximized at a vertex of the Minkowski sum of the scaled convex
//! hulls `h_n * conv(set_n)`. That sum is a convex polygon with at most
//! `sum_n |set_n|` vertices, built here by merging the summands' edges sorted
//! by orientation, so the optimum costs `O(K log K)` instead of an exhaustive
//! search over `prod_n |set_n|` weight tuples.
//!
//! Modules:
//!
//! - [`geometry`]: canonical convex polygons, hulls, and the N-way Minkowski sum.
//! - [`beamforming`]: problem types, the vertex-enumeration solver, the RIS
//!   reduction and the M-PSK fast path.
//! - [`oracle`]: exhaustive search and the support-function dual, used to
//!   cross-check the solver.
//! - [`cli`]: file formats, instance generation, benchmarking and SVG output
//!   behind the `minkbeam` binary.

pub mod beamforming;
pub mod cli;
mod error;
pub mod geometry;
pub mod oracle;

pub use error::{Error, Result};

/// A point of the complex plane. Channel gains, weights and polygon vertices
/// all live here.
pub type ComplexPoint = num_complex::Complex64;

pub use beamforming::{BeamProblem, Method, PhaseSet, Solution};
pub use geometry::{ConvexPolygon, EdgeRecord, MinkowskiSum, VertexProvenance};

/// `|a - b| <= tol * max(|a|, |b|)`.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
