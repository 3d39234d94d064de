//! Minkowski sum of a quadrilateral and a triangle, with the index pair
//! behind every vertex of the sum.

use minkbeam::geometry::{convex_hull, minkowski_sum};
use minkbeam::ComplexPoint;

fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

fn main() -> minkbeam::Result<()> {
    let quad = convex_hull(&[c(0.4, -0.7), c(0.6, 0.7), c(-0.4, 0.6), c(-0.3, -0.4)])?;
    let tri = convex_hull(&[c(0.2, -0.7), c(0.1, 0.3), c(-0.4, -0.1)])?;

    let sum = minkowski_sum(&[quad.clone(), tri.clone()])?;
    println!("{} + {} vertices -> {} vertices", quad.len(), tri.len(), sum.polygon.len());
    for (k, t) in sum.provenance.tuples().enumerate() {
        let z = sum.polygon.vertices()[k];
        println!(
            "  v{k}: ({:+.2}, {:+.2})  = quad[{}] + tri[{}]  |z| = {:.4}",
            z.re,
            z.im,
            t[0],
            t[1],
            z.norm()
        );
    }
    Ok(())
}
