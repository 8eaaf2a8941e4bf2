//! Seeded symbol-error channel.
//!
//! Errors are whole-symbol: a corrupted position has a uniformly random
//! nonzero value XORed into it. The generator is ChaCha8 seeded from
//! [`ChannelSpec::seed`], so the same codeword and spec always produce the
//! same corrupted word.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gf::Gf;
use crate::rs::{self, Codeword, K, N};

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ChannelError {
    #[error("cannot corrupt {0} positions of a {N}-symbol codeword")]
    TooManyErrors(usize),
    #[error("symbol error probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorModel {
    /// Exactly this many distinct positions, chosen uniformly.
    ExactCount(usize),
    /// Each position independently with this probability.
    SymbolProbability(f64),
}

impl ErrorModel {
    pub fn validate(&self) -> Result<(), ChannelError> {
        match *self {
            ErrorModel::ExactCount(n) if n > N => Err(ChannelError::TooManyErrors(n)),
            ErrorModel::SymbolProbability(p) if !(0.0..=1.0).contains(&p) => {
                Err(ChannelError::BadProbability(p))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    pub model: ErrorModel,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn exact(errors: usize, seed: u64) -> ChannelSpec {
        ChannelSpec {
            model: ErrorModel::ExactCount(errors),
            seed,
        }
    }

    pub fn probability(p: f64, seed: u64) -> ChannelSpec {
        ChannelSpec {
            model: ErrorModel::SymbolProbability(p),
            seed,
        }
    }
}

/// SplitMix64 finalizer, used to derive independent per-item seeds from a
/// base seed and an index.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn corrupt_with(cw: &Codeword, model: ErrorModel, rng: &mut ChaCha8Rng) -> (Codeword, Vec<usize>) {
    let mut positions = match model {
        ErrorModel::ExactCount(n) => sample(rng, N, n).into_vec(),
        ErrorModel::SymbolProbability(p) => (0..N).filter(|_| rng.random_bool(p)).collect(),
    };
    positions.sort_unstable();

    let mut out = *cw;
    for &p in &positions {
        out.symbols_mut()[p] += Gf::from_u7(rng.random_range(1..128));
    }
    (out, positions)
}

/// Passes `cw` through the channel. Returns the corrupted word and the
/// corrupted positions in ascending order.
pub fn inject_errors(cw: &Codeword, spec: &ChannelSpec) -> Result<(Codeword, Vec<usize>), ChannelError> {
    spec.model.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(corrupt_with(cw, spec.model, &mut rng))
}

/// Outcome counts for one grid point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: ErrorModel,
    pub trials: usize,
    /// Decoder reported failure.
    pub failures: usize,
    /// Decoder claimed success but returned a different codeword.
    pub miscorrections: usize,
}

impl SweepRow {
    pub fn failure_fraction(&self) -> f64 {
        self.failures as f64 / self.trials as f64
    }

    pub fn miscorrection_fraction(&self) -> f64 {
        self.miscorrections as f64 / self.trials as f64
    }
}

/// Empirical decode failure rate per grid point. Each trial draws a random
/// message, encodes it, corrupts it and decodes it, all from a seed derived
/// from `(base_seed, grid index, trial index)`.
pub fn sweep_decode_failure_rate(
    grid: &[ErrorModel],
    trials: usize,
    base_seed: u64,
) -> Result<Vec<SweepRow>, ChannelError> {
    assert!(trials >= 1, "a sweep needs at least one trial");
    grid.iter().try_for_each(ErrorModel::validate)?;

    let rows = grid
        .iter()
        .enumerate()
        .map(|(g, &model)| {
            let point_seed = derive_seed(base_seed, g as u64);
            let mut row = SweepRow {
                model,
                trials,
                failures: 0,
                miscorrections: 0,
            };
            for t in 0..trials {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(point_seed, t as u64));
                let message: Vec<Gf> = (0..K).map(|_| Gf::from_u7(rng.random_range(0..128))).collect();
                let cw = rs::encode(&message).expect("K symbols");
                let (received, _) = corrupt_with(&cw, model, &mut rng);
                match rs::decode(&received) {
                    Ok(d) if d.codeword == cw => {}
                    Ok(_) => row.miscorrections += 1,
                    Err(_) => row.failures += 1,
                }
            }
            row
        })
        .collect();
    Ok(rows)
}
