//! RIS elements that can also switch off (or attenuate). Adding 0 to each
//! phase set covers every amplitude in [0, 1].

use minkbeam::beamforming::{ris_equivalence_check, solve};
use minkbeam::cli::SolutionFile;
use minkbeam::{BeamProblem, ComplexPoint, PhaseSet};

fn main() -> minkbeam::Result<()> {
    // two phases 0.6 rad apart, so no choice can flip an element's sign
    let set = PhaseSet::new(vec![
        ComplexPoint::from_polar(1.0, -0.3),
        ComplexPoint::from_polar(1.0, 0.3),
    ]);

    // direct path dominates and the reflected paths mostly oppose it
    let problem = BeamProblem::uniform(
        vec![
            ComplexPoint::new(-0.6, 0.1),
            ComplexPoint::new(-0.4, -0.2),
            ComplexPoint::new(0.4, 0.5),
        ],
        set,
    )?
    .with_direct_gain(ComplexPoint::new(3.0, 0.0));

    let always_on = solve(&problem)?;
    let ris = solve(&problem.clone().with_ris_mode(true))?;
    println!("phase only   gain {:.6}", always_on.gain);
    println!("with off     gain {:.6}", ris.gain);
    // -1 marks an element that is switched off
    println!("indices      {:?}", SolutionFile::new(&ris, 0.0).weight_indices);
    println!("no sampled amplitude setting beats it: {}", ris_equivalence_check(&problem));
    Ok(())
}
