//! Seeded random instances.

use super::files::{PhaseSetsSpec, ProblemFile, PskSpec};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ChannelModel {
    /// i.i.d. standard complex Gaussian, `CN(0, 1)`.
    #[default]
    Rayleigh,
    /// Unit modulus with uniform random phase.
    Unit,
}

/// `n` channels drawn from `model` with the `m`-PSK shorthand on every
/// antenna. Identical arguments give identical files.
pub fn generate(n: usize, m: usize, seed: u64, ris: bool, model: ChannelModel) -> ProblemFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let channels = (0..n)
        .map(|_| match model {
            ChannelModel::Rayleigh => {
                let normal = Normal::new(0.0, FRAC_1_SQRT_2).expect("valid std dev");
                [normal.sample(&mut rng), normal.sample(&mut rng)]
            }
            ChannelModel::Unit => {
                let (s, c) = rng.random_range(0.0..TAU).sin_cos();
                [c, s]
            }
        })
        .collect();
    ProblemFile {
        h0: None,
        channels,
        phase_sets: PhaseSetsSpec::Psk { psk: PskSpec { m } },
        ris_mode: ris.then_some(true),
    }
}
