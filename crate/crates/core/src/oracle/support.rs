use crate::geometry::ConvexPolygon;
use crate::{ComplexPoint, Error, Result};
use std::f64::consts::{PI, TAU};

/// Breakpoints closer than this (radians) are merged.
pub const ARC_MERGE_TOLERANCE: f64 = 1e-12;

/// `sum_n max_{z in P_n} Re(e^{-j theta} z)`.
pub fn support_value(summands: &[ConvexPolygon], theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    summands
        .iter()
        .map(|p| {
            p.vertices()
                .iter()
                .map(|z| z.re * c + z.im * s)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .sum()
}

/// Partition of the circle of directions into arcs with a constant
/// maximizer per summand.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcBreakpoints {
    /// Strictly increasing arc start angles in `[0, 2 pi)`. Arc `i` runs to
    /// `angles[i + 1]`, the last one wraps around to `angles[0] + 2 pi`.
    /// Empty when every summand is a point (a single arc covers the circle).
    pub angles: Vec<f64>,
    /// `maximizers[i][n]`: vertex of summand `n` that is extreme on arc `i`.
    pub maximizers: Vec<Vec<usize>>,
}

impl ArcBreakpoints {
    pub fn arc_count(&self) -> usize {
        self.maximizers.len()
    }
}

/// Arc boundaries are the outward normals of the summands' edges. Each
/// arc's maximizers are found by direct evaluation at its midpoint.
pub fn arc_breakpoints(summands: &[ConvexPolygon]) -> ArcBreakpoints {
    let mut normals: Vec<f64> = Vec::new();
    for p in summands {
        if p.is_point() {
            continue;
        }
        let v = p.vertices();
        for i in 0..v.len() {
            let e = v[(i + 1) % v.len()] - v[i];
            // ccw polygon: outward normal is the edge turned clockwise
            let normal = (-e.re).atan2(e.im);
            normals.push(normal.rem_euclid(TAU));
        }
    }
    normals.sort_by(f64::total_cmp);
    let mut angles: Vec<f64> = Vec::with_capacity(normals.len());
    for a in normals {
        match angles.last() {
            Some(&prev) if a - prev <= ARC_MERGE_TOLERANCE => {}
            _ => angles.push(a),
        }
    }
    if angles.len() > 1 && angles[0] + TAU - angles[angles.len() - 1] <= ARC_MERGE_TOLERANCE {
        angles.pop();
    }

    let midpoints: Vec<f64> = match angles.len() {
        0 => vec![0.0],
        1 => vec![angles[0] + PI],
        k => (0..k)
            .map(|i| {
                let end = if i + 1 < k { angles[i + 1] } else { angles[0] + TAU };
                0.5 * (angles[i] + end)
            })
            .collect(),
    };
    let maximizers = midpoints
        .iter()
        .map(|&theta| {
            let dir = ComplexPoint::from_polar(1.0, theta);
            summands.iter().map(|p| argmax_projection(p, dir)).collect()
        })
        .collect();
    ArcBreakpoints { angles, maximizers }
}

fn argmax_projection(p: &ConvexPolygon, dir: ComplexPoint) -> usize {
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for (i, z) in p.vertices().iter().enumerate() {
        let val = z.re * dir.re + z.im * dir.im;
        if val > best_val {
            best_val = val;
            best = i;
        }
    }
    best
}

/// Result of the support-function route.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportSolution {
    /// Largest Thales-circle diameter over all arcs.
    pub gain: f64,
    /// The diameter endpoint `sum_n P_n[tuple[n]]` of the winning circle.
    pub z: ComplexPoint,
    /// Per-summand vertex indices of the winning arc.
    pub tuple: Vec<usize>,
    pub arc_count: usize,
}

/// Maximum of `|z|` over the sum of the summands, computed from the arcs.
///
/// On each arc the support function is `Re(e^{-j theta} z_arc)` with
/// `z_arc` the sum of that arc's maximizers; its Thales circle has diameter
/// `|z_arc|`, and the largest diameter is the optimum. Ties go to the first
/// arc.
pub fn support_solve(summands: &[ConvexPolygon]) -> Result<SupportSolution> {
    if summands.is_empty() {
        return Err(Error::EmptyPolygonList);
    }
    let arcs = arc_breakpoints(summands);
    let mut best: Option<(f64, ComplexPoint, usize)> = None;
    for (i, tuple) in arcs.maximizers.iter().enumerate() {
        let z = tuple
            .iter()
            .zip(summands)
            .map(|(&v, p)| p.vertices()[v])
            .sum::<ComplexPoint>();
        let d = z.norm();
        if best.is_none_or(|(b, _, _)| d > b) {
            best = Some((d, z, i));
        }
    }
    let (gain, z, i) = best.expect("at least one arc");
    Ok(SupportSolution {
        gain,
        z,
        tuple: arcs.maximizers[i].clone(),
        arc_count: arcs.arc_count(),
    })
}

/// `| |e^{j theta} Re(e^{-j theta} z) - z/2| - |z|/2 |`: how far the
/// projection of `z` onto direction `theta` lies off the circle with
/// diameter `[0, z]`.
pub fn thales_residual(z: ComplexPoint, theta: f64) -> f64 {
    let dir = ComplexPoint::from_polar(1.0, theta);
    let projection = dir * (dir.conj() * z).re;
    ((projection - z / 2.0).norm() - z.norm() / 2.0).abs()
}
