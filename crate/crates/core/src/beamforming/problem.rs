use crate::geometry::is_finite;
use crate::{ComplexPoint, Error, Result};
use std::f64::consts::TAU;
use std::fmt;

/// Finite set of admissible complex weights for one antenna or element.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSet {
    pub elements: Vec<ComplexPoint>,
    pub label: Option<String>,
}

impl PhaseSet {
    pub fn new(elements: Vec<ComplexPoint>) -> Self {
        Self {
            elements,
            label: None,
        }
    }

    /// The `m`-th roots of unity `e^{j 2 pi k / m}`, `k = 0..m`.
    pub fn psk(m: usize) -> Self {
        Self {
            elements: (0..m).map(|k| psk_element(k, m)).collect(),
            label: Some(format!("{m}-PSK")),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `e^{j 2 pi k / m}`, exact on the axes.
pub fn psk_element(k: usize, m: usize) -> ComplexPoint {
    let k = k % m;
    if (4 * k).is_multiple_of(m) {
        match 4 * k / m {
            0 => ComplexPoint::new(1.0, 0.0),
            1 => ComplexPoint::new(0.0, 1.0),
            2 => ComplexPoint::new(-1.0, 0.0),
            _ => ComplexPoint::new(0.0, -1.0),
        }
    } else {
        ComplexPoint::from_polar(1.0, TAU * k as f64 / m as f64)
    }
}

/// One instance of `max |h0 + sum_n w_n h_n|` subject to `w_n` in set `n`.
///
/// With `ris_mode` each set is augmented with `0` ("element off"), which by
/// convexity also covers every amplitude-scaled weight `t * w`, `t` in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamProblem {
    pub direct_gain: ComplexPoint,
    pub channels: Vec<ComplexPoint>,
    pub phase_sets: Vec<PhaseSet>,
    pub ris_mode: bool,
}

impl BeamProblem {
    pub fn new(channels: Vec<ComplexPoint>, phase_sets: Vec<PhaseSet>) -> Result<Self> {
        let p = Self {
            direct_gain: ComplexPoint::new(0.0, 0.0),
            channels,
            phase_sets,
            ris_mode: false,
        };
        p.validate()?;
        Ok(p)
    }

    /// Every antenna gets the same set.
    pub fn uniform(channels: Vec<ComplexPoint>, set: PhaseSet) -> Result<Self> {
        let sets = vec![set; channels.len()];
        Self::new(channels, sets)
    }

    pub fn with_direct_gain(mut self, h0: ComplexPoint) -> Self {
        self.direct_gain = h0;
        self
    }

    pub fn with_ris_mode(mut self, on: bool) -> Self {
        self.ris_mode = on;
        self
    }

    pub fn antenna_count(&self) -> usize {
        self.channels.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.channels.is_empty() {
            return Err(Error::InvalidProblem("at least one antenna is required".into()));
        }
        if self.channels.len() != self.phase_sets.len() {
            return Err(Error::InvalidProblem(format!(
                "{} channels but {} phase sets",
                self.channels.len(),
                self.phase_sets.len()
            )));
        }
        if let Some(n) = self.phase_sets.iter().position(|s| s.is_empty()) {
            return Err(Error::InvalidProblem(format!("phase set {n} is empty")));
        }
        let finite = is_finite(self.direct_gain)
            && self.channels.iter().all(|&h| is_finite(h))
            && self
                .phase_sets
                .iter()
                .all(|s| s.elements.iter().all(|&w| is_finite(w)));
        if !finite {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    /// Size of the search space an exhaustive search would visit, counting
    /// the off state in RIS mode. Saturates at `u128::MAX`.
    pub fn tuple_count(&self) -> u128 {
        let extra = u128::from(self.ris_mode);
        self.phase_sets
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s.len() as u128 + extra))
            .unwrap_or(u128::MAX)
    }

    /// `h0 + sum_n w_n h_n` for explicit per-antenna choices (`None` = off).
    pub fn combine(&self, choices: &[Option<usize>]) -> ComplexPoint {
        let mut z = self.direct_gain;
        for ((&h, set), choice) in self.channels.iter().zip(&self.phase_sets).zip(choices) {
            if let Some(i) = choice {
                z += set.elements[*i] * h;
            }
        }
        z
    }
}

/// Which algorithm produced a [`Solution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    General,
    PskFastPath,
    BruteForce,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::General => "general",
            Method::PskFastPath => "psk_fast_path",
            Method::BruteForce => "brute_force",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "general" => Ok(Method::General),
            "psk_fast_path" => Ok(Method::PskFastPath),
            "brute_force" => Ok(Method::BruteForce),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// `|z_star|`.
    pub gain: f64,
    /// `h0 + sum_n weights[n] * h_n`.
    pub z_star: ComplexPoint,
    /// Index into each phase set; `None` is the RIS off state (weight 0).
    pub weight_indices: Vec<Option<usize>>,
    pub weights: Vec<ComplexPoint>,
    /// Vertex count of the sum polygon. Zero for brute force.
    pub vertex_count: usize,
    pub method: Method,
}

impl Solution {
    pub(crate) fn from_choices(
        problem: &BeamProblem,
        weight_indices: Vec<Option<usize>>,
        vertex_count: usize,
        method: Method,
    ) -> Self {
        let weights = weight_indices
            .iter()
            .zip(&problem.phase_sets)
            .map(|(choice, set)| choice.map_or(ComplexPoint::new(0.0, 0.0), |i| set.elements[i]))
            .collect();
        let z_star = problem.combine(&weight_indices);
        Self {
            gain: z_star.norm(),
            z_star,
            weight_indices,
            weights,
            vertex_count,
            method,
        }
    }
}
