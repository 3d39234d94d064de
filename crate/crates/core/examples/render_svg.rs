//! Draws the summands, their sum and the Thales circles.
//!
//! `cargo run --example render_svg -- out.svg`

use minkbeam::cli::render_svg;
use minkbeam::{BeamProblem, ComplexPoint, PhaseSet};

fn main() -> minkbeam::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "minkowski.svg".into());
    let c = ComplexPoint::new;
    let problem = BeamProblem::new(
        vec![c(1.0, 0.0), c(0.6, 0.5), c(-0.2, 0.4)],
        vec![PhaseSet::psk(3), PhaseSet::psk(4), PhaseSet::new(vec![c(1.0, 0.0), c(0.0, 1.0)])],
    )?;
    let svg = render_svg(&problem, true)?;
    std::fs::write(&path, svg).expect("writable output path");
    println!("wrote {path}");
    Ok(())
}
