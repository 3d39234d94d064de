//! JSON problem and solution files. Complex numbers are `[re, im]` pairs.

use crate::beamforming::{BeamProblem, PhaseSet, Solution};
use crate::{ComplexPoint, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0: Option<[f64; 2]>,
    pub channels: Vec<[f64; 2]>,
    pub phase_sets: PhaseSetsSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ris_mode: Option<bool>,
}

/// Either one explicit set per antenna or `{"psk": {"M": m}}`, which
/// expands to the `m`-th roots of unity on every antenna.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhaseSetsSpec {
    Explicit(Vec<PhaseSetEntry>),
    Psk { psk: PskSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseSetEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub elements: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PskSpec {
    #[serde(rename = "M")]
    pub m: usize,
}

fn to_complex(p: [f64; 2]) -> ComplexPoint {
    ComplexPoint::new(p[0], p[1])
}

fn to_pair(z: ComplexPoint) -> [f64; 2] {
    [z.re, z.im]
}

impl ProblemFile {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem file serializes")
    }

    /// Expands the PSK shorthand and validates the instance.
    pub fn to_problem(&self) -> Result<BeamProblem> {
        let channels: Vec<ComplexPoint> = self.channels.iter().copied().map(to_complex).collect();
        let phase_sets = match &self.phase_sets {
            PhaseSetsSpec::Explicit(entries) => entries
                .iter()
                .map(|e| PhaseSet {
                    elements: e.elements.iter().copied().map(to_complex).collect(),
                    label: e.label.clone(),
                })
                .collect(),
            PhaseSetsSpec::Psk { psk } => vec![PhaseSet::psk(psk.m); channels.len()],
        };
        let problem = BeamProblem {
            direct_gain: self.h0.map_or(ComplexPoint::new(0.0, 0.0), to_complex),
            channels,
            phase_sets,
            ris_mode: self.ris_mode.unwrap_or(false),
        };
        problem.validate()?;
        Ok(problem)
    }

    /// Explicit-set encoding of `problem`.
    pub fn from_problem(problem: &BeamProblem) -> Self {
        let zero = ComplexPoint::new(0.0, 0.0);
        Self {
            h0: (problem.direct_gain != zero).then(|| to_pair(problem.direct_gain)),
            channels: problem.channels.iter().copied().map(to_pair).collect(),
            phase_sets: PhaseSetsSpec::Explicit(
                problem
                    .phase_sets
                    .iter()
                    .map(|s| PhaseSetEntry {
                        label: s.label.clone(),
                        elements: s.elements.iter().copied().map(to_pair).collect(),
                    })
                    .collect(),
            ),
            ris_mode: problem.ris_mode.then_some(true),
        }
    }
}

/// Serialized [`Solution`]. An off RIS element has weight index `-1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub gain: f64,
    pub z_star: [f64; 2],
    pub weight_indices: Vec<i64>,
    pub weights: Vec<[f64; 2]>,
    pub vertex_count: usize,
    pub method: String,
    pub elapsed_ms: f64,
}

impl SolutionFile {
    pub fn new(solution: &Solution, elapsed_ms: f64) -> Self {
        Self {
            gain: solution.gain,
            z_star: to_pair(solution.z_star),
            weight_indices: solution
                .weight_indices
                .iter()
                .map(|w| w.map_or(-1, |i| i as i64))
                .collect(),
            weights: solution.weights.iter().copied().map(to_pair).collect(),
            vertex_count: solution.vertex_count,
            method: solution.method.to_string(),
            elapsed_ms,
        }
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution file serializes")
    }

    /// Back to a [`Solution`]; `None` if the method name or an index is invalid.
    pub fn to_solution(&self) -> Option<Solution> {
        Some(Solution {
            gain: self.gain,
            z_star: to_complex(self.z_star),
            weight_indices: self
                .weight_indices
                .iter()
                .map(|&i| match i {
                    -1 => Some(None),
                    i if i >= 0 => Some(Some(i as usize)),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()?,
            weights: self.weights.iter().copied().map(to_complex).collect(),
            vertex_count: self.vertex_count,
            method: self.method.parse().ok()?,
        })
    }
}
