//! N-way Minkowski sum of convex polygons by orientation-sorted edge merge.
//!
//! Every summand contributes its edges tagged with their direction. After a
//! single sort by direction, walking the merged edge list from the sum of
//! the summands' start vertices traces the boundary of the sum. Each step
//! advances the vertex cursor of the summand that owns the edge, so the
//! cursors at step `k` name the summand vertices adding up to vertex `k`.
//! Edges parallel within [`PARALLEL_TOLERANCE`] are taken in one step, which
//! removes the vertex that would sit between them.

use super::{direction_angle, CompensatedPoint, ConvexPolygon, PARALLEL_TOLERANCE};
use crate::{ComplexPoint, Error, Result};

/// Per-vertex index tuples of a Minkowski sum, stored as the merged edge
/// sequence rather than as `K x N` explicit indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexProvenance {
    arity: usize,
    /// Source summand of each merged edge, in walk order.
    sources: Vec<u32>,
    /// `group_ends[k]` is one past the last edge leaving vertex `k`.
    group_ends: Vec<usize>,
    vertex_count: usize,
    /// Vertex count of each summand; cursors wrap at these.
    sizes: Vec<usize>,
}

impl VertexProvenance {
    /// Number of summands, i.e. the length of each tuple.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// Index tuple of vertex `k`: entry `n` is a vertex index of summand `n`.
    ///
    /// Replays the edge walk, so this is `O(K + N)`.
    pub fn tuple(&self, k: usize) -> Vec<usize> {
        assert!(k < self.vertex_count, "vertex {k} out of range");
        let mut cursor = vec![0usize; self.arity];
        let upto = if k == 0 { 0 } else { self.group_ends[k - 1] };
        for &s in &self.sources[..upto] {
            self.advance(&mut cursor, s);
        }
        cursor
    }

    /// All tuples in vertex order. Each item is a fresh `Vec` of length
    /// [`arity`](Self::arity); avoid on very large instances.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let mut cursor = vec![0usize; self.arity];
        let mut start = 0;
        (0..self.vertex_count).map(move |k| {
            let out = cursor.clone();
            let end = self.group_ends.get(k).copied().unwrap_or(start);
            for &s in &self.sources[start..end] {
                self.advance(&mut cursor, s);
            }
            start = end;
            out
        })
    }

    fn advance(&self, cursor: &mut [usize], s: u32) {
        let s = s as usize;
        cursor[s] += 1;
        if cursor[s] == self.sizes[s] {
            cursor[s] = 0;
        }
    }

    /// Summands whose edges leave vertex `k`.
    pub fn step_sources(&self, k: usize) -> &[u32] {
        let start = if k == 0 { 0 } else { self.group_ends[k - 1] };
        let end = self.group_ends.get(k).copied().unwrap_or(start);
        &self.sources[start..end]
    }
}

struct EdgeStep {
    key: u128,
    from: ComplexPoint,
    to: ComplexPoint,
}

impl EdgeStep {
    fn angle(&self) -> f64 {
        f64::from_bits((self.key >> 64) as u64)
    }

    fn source(&self) -> u32 {
        (self.key >> 32) as u32
    }
}

/// The sum polygon together with the provenance of each vertex.
///
/// The polygon's own `provenance()` is the identity map `0..K`; the
/// per-summand tuples live in [`MinkowskiSum::provenance`].
#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiSum {
    pub polygon: ConvexPolygon,
    pub provenance: VertexProvenance,
}

/// Minkowski sum `P_1 + ... + P_N` of canonical convex polygons.
///
/// Points and segments are allowed as summands. The result has at most
/// `sum_n |P_n|` vertices, starts at the sum of the summands' start vertices
/// (which is its own canonical start), and vertex `k` equals the sum of the
/// summand vertices named by `provenance.tuple(k)`.
pub fn minkowski_sum(polygons: &[ConvexPolygon]) -> Result<MinkowskiSum> {
    if polygons.is_empty() {
        return Err(Error::EmptyPolygonList);
    }

    // Angles are non-negative with no -0.0, so their bit patterns sort like
    // the values and one u128 key orders edges by (angle, n, m). Sorting the
    // full records makes the walk a sequential scan.
    let total_edges: usize = polygons.iter().map(|p| p.edge_count()).sum();
    let mut steps: Vec<EdgeStep> = Vec::with_capacity(total_edges);
    for (n, p) in polygons.iter().enumerate() {
        let v = p.vertices();
        for m in 0..p.edge_count() {
            let (from, to) = (v[m], v[(m + 1) % v.len()]);
            let angle = direction_angle(to - from).to_bits();
            steps.push(EdgeStep {
                key: u128::from(angle) << 64 | (n as u128) << 32 | m as u128,
                from,
                to,
            });
        }
    }
    steps.sort_unstable_by_key(|e| e.key);

    let mut acc = CompensatedPoint::default();
    for p in polygons {
        acc.add(p.vertices()[0]);
    }
    let mut vertices = vec![acc.value()];
    let mut sources = Vec::with_capacity(steps.len());
    let mut group_ends = Vec::new();

    let mut i = 0;
    while i < steps.len() {
        let mut j = i + 1;
        while j < steps.len() && steps[j].angle() - steps[j - 1].angle() <= PARALLEL_TOLERANCE {
            j += 1;
        }
        for e in &steps[i..j] {
            acc.add(e.to);
            acc.sub(e.from);
            sources.push(e.source());
        }
        group_ends.push(j);
        if j < steps.len() {
            vertices.push(acc.value());
        }
        i = j;
    }

    let vertex_count = vertices.len();
    Ok(MinkowskiSum {
        polygon: ConvexPolygon::from_parts(vertices, (0..vertex_count).collect()),
        provenance: VertexProvenance {
            arity: polygons.len(),
            sources,
            group_ends,
            vertex_count,
            sizes: polygons.iter().map(ConvexPolygon::len).collect(),
        },
    })
}
