//! Reading and writing the JSON problem and solution formats.

use minkbeam::beamforming::solve;
use minkbeam::cli::{ProblemFile, SolutionFile};

const PROBLEM: &str = r#"{
  "h0": [0.2, -0.1],
  "channels": [[1.0, 0.0], [0.3, 0.8]],
  "phase_sets": [
    {"label": "bpsk", "elements": [[1, 0], [-1, 0]]},
    {"elements": [[1, 0], [0, 1], [-1, 0]]}
  ],
  "ris_mode": true
}"#;

fn main() -> minkbeam::Result<()> {
    let file = ProblemFile::from_json(PROBLEM).expect("valid problem file");
    let problem = file.to_problem()?;
    let solution = solve(&problem)?;
    println!("{}", SolutionFile::new(&solution, 0.0).to_json());

    // the PSK shorthand expands to the roots of unity on every antenna
    let psk = ProblemFile::from_json(r#"{"channels": [[1, 0], [0, 1]], "phase_sets": {"psk": {"M": 8}}}"#)
        .expect("valid problem file");
    println!("{}", ProblemFile::from_problem(&psk.to_problem()?).to_json());
    Ok(())
}
