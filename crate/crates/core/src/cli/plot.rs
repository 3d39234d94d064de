//! Static SVG picture of the scaled summands, their Minkowski sum with index
//! tuple labels, and optionally the Thales circle of every support arc.

use crate::beamforming::{build_summands, BeamProblem};
use crate::geometry::minkowski_sum;
use crate::oracle::arc_breakpoints;
use crate::{ComplexPoint, Result};
use std::fmt::Write;

/// Larger instances are refused by `minkbeam plot`; labels stop being legible.
pub const MAX_PLOT_ANTENNAS: usize = 6;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 48.0;
const PALETTE: [&str; 7] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf",
];
const SUM_COLOR: &str = "#6a3d9a";

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = ComplexPoint>) -> Self {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for p in points {
            xmin = xmin.min(p.re);
            xmax = xmax.max(p.re);
            ymin = ymin.min(p.im);
            ymax = ymax.max(p.im);
        }
        let span = (xmax - xmin).max(ymax - ymin).max(1e-9);
        let pad = 0.05 * span;
        Self {
            x0: xmin - pad,
            y0: ymin - pad,
            scale: (SIZE - 2.0 * MARGIN) / (span + 2.0 * pad),
        }
    }

    fn map(&self, z: ComplexPoint) -> (f64, f64) {
        (
            MARGIN + (z.re - self.x0) * self.scale,
            SIZE - MARGIN - (z.im - self.y0) * self.scale,
        )
    }

    fn points_attr(&self, vertices: &[ComplexPoint]) -> String {
        vertices
            .iter()
            .map(|&v| {
                let (x, y) = self.map(v);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Renders `problem` as an SVG 1.1 document.
///
/// The sum polygon gets one `<text class="vertex-label">` per vertex holding
/// its 0-based index tuple over all summands (antennas first, then the
/// direct path if present).
pub fn render_svg(problem: &BeamProblem, show_circles: bool) -> Result<String> {
    let summands = build_summands(problem)?;
    let sum = minkowski_sum(&summands.polygons)?;
    let circles: Vec<ComplexPoint> = if show_circles {
        let arcs = arc_breakpoints(&summands.polygons);
        arcs.maximizers
            .iter()
            .map(|t| {
                t.iter()
                    .zip(&summands.polygons)
                    .map(|(&v, p)| p.vertices()[v])
                    .sum()
            })
            .collect()
    } else {
        Vec::new()
    };

    let frame = Frame::fit(
        summands
            .polygons
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .chain(sum.polygon.vertices().iter().copied())
            .chain(circles.iter().flat_map(|&z| {
                let (c, r) = (z / 2.0, z.norm() / 2.0);
                [c + r, c - r, c + ComplexPoint::new(0.0, r), c - ComplexPoint::new(0.0, r)]
            })),
    );

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let (ox, oy) = frame.map(ComplexPoint::new(0.0, 0.0));
    writeln!(w, r#"<g class="axes" stroke="black" stroke-width="0.8">"#).unwrap();
    writeln!(w, r#"<line x1="{:.3}" y1="{oy:.3}" x2="{:.3}" y2="{oy:.3}"/>"#, MARGIN / 2.0, SIZE - MARGIN / 2.0).unwrap();
    writeln!(w, r#"<line x1="{ox:.3}" y1="{:.3}" x2="{ox:.3}" y2="{:.3}"/>"#, SIZE - MARGIN / 2.0, MARGIN / 2.0).unwrap();
    writeln!(w, "</g>").unwrap();
    writeln!(
        w,
        r#"<text class="axis-label" x="{:.3}" y="{:.3}" font-size="14">Re</text>"#,
        SIZE - MARGIN / 2.0 - 20.0,
        oy - 6.0
    )
    .unwrap();
    writeln!(
        w,
        r#"<text class="axis-label" x="{:.3}" y="{:.3}" font-size="14">Im</text>"#,
        ox + 6.0,
        MARGIN / 2.0 + 12.0
    )
    .unwrap();

    writeln!(w, r#"<g class="summands">"#).unwrap();
    for (n, p) in summands.polygons.iter().enumerate() {
        let color = PALETTE[n % PALETTE.len()];
        if p.is_point() {
            let (x, y) = frame.map(p.vertices()[0]);
            writeln!(w, r#"<circle class="summand" cx="{x:.3}" cy="{y:.3}" r="3" fill="{color}"/>"#).unwrap();
        } else {
            writeln!(
                w,
                r#"<polygon class="summand" points="{}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="1.5"/>"#,
                frame.points_attr(p.vertices())
            )
            .unwrap();
        }
    }
    writeln!(w, "</g>").unwrap();

    if !circles.is_empty() {
        writeln!(w, r#"<g class="thales-circles" fill="none" stroke="{SUM_COLOR}" stroke-opacity="0.6" stroke-dasharray="4 3">"#).unwrap();
        for &z in &circles {
            let (cx, cy) = frame.map(z / 2.0);
            let r = z.norm() / 2.0 * frame.scale;
            writeln!(w, r#"<circle class="thales" cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}"/>"#).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }

    let vertices = sum.polygon.vertices();
    writeln!(
        w,
        r#"<polygon class="minkowski-sum" points="{}" fill="{SUM_COLOR}" fill-opacity="0.2" stroke="{SUM_COLOR}" stroke-width="2"/>"#,
        frame.points_attr(vertices)
    )
    .unwrap();
    let best = vertices
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (k, z)| {
            if z.norm_sqr() > acc.1 {
                (k, z.norm_sqr())
            } else {
                acc
            }
        })
        .0;
    writeln!(w, r#"<g class="sum-vertices" font-size="11">"#).unwrap();
    for (k, tuple) in sum.provenance.tuples().enumerate() {
        let (x, y) = frame.map(vertices[k]);
        let class = if k == best { "sum-vertex optimum" } else { "sum-vertex" };
        let r = if k == best { 4.5 } else { 2.5 };
        writeln!(w, r#"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="{r}" fill="{SUM_COLOR}"/>"#).unwrap();
        let label = tuple.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        writeln!(
            w,
            r#"<text class="vertex-label" x="{:.3}" y="{:.3}">({label})</text>"#,
            x + 5.0,
            y - 5.0
        )
        .unwrap();
    }
    writeln!(w, "</g>").unwrap();
    writeln!(w, "</svg>").unwrap();
    Ok(svg)
}
