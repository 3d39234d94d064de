use super::{direction_angle, hull, is_finite};
use crate::{ComplexPoint, Error, Result};

/// A convex polygon in canonical form.
///
/// `provenance[i]` is the index, in whatever finite point set the polygon was
/// built from, of the element that produced `vertices[i]`. A polygon with one
/// vertex is a point and a polygon with two vertices is a segment.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<ComplexPoint>,
    provenance: Vec<usize>,
}

impl ConvexPolygon {
    /// The one-vertex polygon `{c}` with provenance `[0]`.
    pub fn point(c: ComplexPoint) -> Result<Self> {
        if !is_finite(c) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            vertices: vec![c],
            provenance: vec![0],
        })
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_parts(vertices: Vec<ComplexPoint>, provenance: Vec<usize>) -> Self {
        debug_assert_eq!(vertices.len(), provenance.len());
        debug_assert!(!vertices.is_empty());
        Self {
            vertices,
            provenance,
        }
    }

    pub fn vertices(&self) -> &[ComplexPoint] {
        &self.vertices
    }

    pub fn provenance(&self) -> &[usize] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Number of edges in the closed walk `p_0 -> p_1 -> ... -> p_0`.
    /// A segment has two (out and back), a point none.
    pub fn edge_count(&self) -> usize {
        if self.is_point() {
            0
        } else {
            self.vertices.len()
        }
    }

    /// The `m`-th edge vector `p_{m+1} - p_m`, indices taken cyclically.
    pub fn edge(&self, m: usize) -> ComplexPoint {
        let n = self.vertices.len();
        self.vertices[(m + 1) % n] - self.vertices[m % n]
    }

    /// Multiplies every vertex by `factor` and restores canonical form.
    ///
    /// Complex multiplication is a rotation plus a uniform scaling, so only
    /// the start vertex moves. A zero factor collapses the polygon to the
    /// point `{0}` with provenance `[0]`.
    pub fn scale(&self, factor: ComplexPoint) -> Result<Self> {
        if !is_finite(factor) {
            return Err(Error::NonFinite);
        }
        if factor == ComplexPoint::new(0.0, 0.0) {
            return Ok(Self {
                vertices: vec![ComplexPoint::new(0.0, 0.0)],
                provenance: vec![0],
            });
        }
        let scaled: Vec<ComplexPoint> = self.vertices.iter().map(|&v| v * factor).collect();
        if !scaled.iter().all(|&v| is_finite(v)) {
            return Err(Error::NonFinite);
        }
        let idx = hull::hull_indices(&scaled);
        Ok(Self {
            vertices: idx.iter().map(|&i| scaled[i]).collect(),
            provenance: idx.iter().map(|&i| self.provenance[i]).collect(),
        })
    }

    /// Index of the vertex maximizing `Re(conj(direction) * z)`; first one on ties.
    pub fn extreme_vertex(&self, direction: ComplexPoint) -> usize {
        let mut best = 0;
        let mut best_val = f64::NEG_INFINITY;
        for (i, v) in self.vertices.iter().enumerate() {
            let val = v.re * direction.re + v.im * direction.im;
            if val > best_val {
                best_val = val;
                best = i;
            }
        }
        best
    }
}

/// One polygon edge tagged with its direction and the summand it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeRecord {
    /// `arg(edge)` in `[0, 2pi)`.
    pub angle: f64,
    pub source_polygon: usize,
    /// Index of the edge's tail vertex within its polygon.
    pub edge_index: usize,
    pub edge: ComplexPoint,
}

/// Edge records of `polygon` in walk order, tagged with `source_polygon`.
///
/// Thanks to the canonical start vertex the angles come out increasing. A
/// point yields no edges.
pub fn edge_angles(polygon: &ConvexPolygon, source_polygon: usize) -> Vec<EdgeRecord> {
    (0..polygon.edge_count())
        .map(|m| {
            let edge = polygon.edge(m);
            EdgeRecord {
                angle: direction_angle(edge),
                source_polygon,
                edge_index: m,
                edge,
            }
        })
        .collect()
}

/// Neumaier-compensated running sum of complex values.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedPoint {
    re: Compensated,
    im: Compensated,
}

impl CompensatedPoint {
    pub(crate) fn add(&mut self, z: ComplexPoint) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub(crate) fn sub(&mut self, z: ComplexPoint) {
        self.re.add(-z.re);
        self.im.add(-z.im);
    }

    pub(crate) fn value(&self) -> ComplexPoint {
        ComplexPoint::new(self.re.value(), self.im.value())
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}
