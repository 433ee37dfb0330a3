//! Seeded random integer sets: pseudo `k`-th powers, the pair construction
//! over `T_{1,θ}`, and Monte Carlo checks of their sumset densities.
//!
//! Every integer `m` draws one uniform from ChaCha8 keyed by the seed, on a
//! stream chosen by the sampler, at word position `2m`. Output therefore
//! does not depend on thread count or evaluation order.

mod report;
mod sums;
mod tolerance;

use num_traits::{ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::integer::{beatty_t, FiniteIntegerSet, FixedPointReal};
use crate::rational::Rational;

pub use report::{density_report, DensityRow, SimulationReport, REPORT_SCHEMA};
pub use sums::{j_asymptote, j_sum, s_k_bruteforce, s_k_sample, SkRow, SkSample};
pub use tolerance::{Tolerances, TOLERANCES};

const STREAM_PSEUDO_POWERS: u64 = 1;
const STREAM_PAIR: u64 = 2;
/// Integers handled per parallel task.
const CHUNK: usize = 1 << 18;

/// Parameters of a pseudo `k`-th power sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplerConfig {
    pub k: usize,
    pub c: f64,
    pub theta: FixedPointReal,
    pub horizon: usize,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(k: usize, c: f64, theta: FixedPointReal, horizon: usize, seed: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("k", "must be at least 1"));
        }
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::param("c", "must be finite and nonnegative"));
        }
        if horizon < 2 {
            return Err(Error::param("horizon", "must be at least 2"));
        }
        Ok(Self {
            k,
            c,
            theta,
            horizon,
            seed,
        })
    }

    /// `min(1, c·m^{−1+1/k})`.
    pub fn probability(&self, m: usize) -> f64 {
        let e = -1.0 + 1.0 / self.k as f64;
        (self.c * (m as f64).powf(e)).min(1.0)
    }
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `{m ∈ [0, N) : U_m < p(m)}` with `U_m` the draw of `m` on `stream`.
fn bernoulli_set(
    horizon: usize,
    seed: u64,
    stream: u64,
    p: impl Fn(usize) -> f64 + Sync,
) -> FiniteIntegerSet {
    let fill = |c: usize, words: &mut [u64]| {
        let start = c * CHUNK;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng.set_word_pos(2 * start as u128);
        for m in start..(start + CHUNK).min(horizon) {
            let u = unit(rng.next_u64());
            if u < p(m) {
                let off = m - start;
                words[off / 64] |= 1 << (off % 64);
            }
        }
    };
    let mut words = vec![0u64; horizon.div_ceil(64)];
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        words
            .par_chunks_mut(CHUNK / 64)
            .enumerate()
            .for_each(|(c, w)| fill(c, w));
    }
    #[cfg(not(feature = "parallel"))]
    for (c, w) in words.chunks_mut(CHUNK / 64).enumerate() {
        fill(c, w);
    }
    FiniteIntegerSet::from_words(horizon, words).expect("word count matches horizon")
}

/// Each `m ∈ [1, N)` independently with probability `min(1, c·m^{−1+1/k})`.
pub fn sample_pseudo_powers(cfg: &SamplerConfig) -> FiniteIntegerSet {
    if cfg.c == 0.0 {
        return FiniteIntegerSet::empty(cfg.horizon);
    }
    bernoulli_set(cfg.horizon, cfg.seed, STREAM_PSEUDO_POWERS, |m| {
        if m == 0 {
            0.0
        } else {
            cfg.probability(m)
        }
    })
}

/// `S ∩ T_{k,θ}`.
pub fn restrict_to_t(s: &FiniteIntegerSet, k: usize, theta: &FixedPointReal) -> Result<FiniteIntegerSet> {
    if theta.is_integer() {
        return Ok(s.clone());
    }
    let t = beatty_t(k, theta, s.horizon())?;
    intersect(s, &t)
}

fn intersect(a: &FiniteIntegerSet, b: &FiniteIntegerSet) -> Result<FiniteIntegerSet> {
    if a.horizon() != b.horizon() {
        return Err(Error::HorizonMismatch {
            left: a.horizon(),
            right: b.horizon(),
        });
    }
    let words = a.words().iter().zip(b.words()).map(|(x, y)| x & y).collect();
    FiniteIntegerSet::from_words(a.horizon(), words)
}

/// Pseudo `k`-th powers restricted to `T_{k,θ}`.
pub fn sample_restricted(cfg: &SamplerConfig) -> FiniteIntegerSet {
    restrict_to_t(&sample_pseudo_powers(cfg), cfg.k, &cfg.theta).expect("config has k >= 1")
}

/// Random subset of `T_{1,θ} ∩ [0, N)` keeping each element with
/// probability `β`, or `m^{−1/5}` when `β = 0`.
pub fn sample_pair_set(
    theta: &FixedPointReal,
    beta: &Rational,
    horizon: usize,
    seed: u64,
) -> Result<FiniteIntegerSet> {
    if beta < &Rational::zero() || beta > &Rational::from_integer(1.into()) {
        return Err(Error::param("beta", "must lie in [0, 1]"));
    }
    let t = beatty_t(1, theta, horizon)?;
    let b = beta.to_f64().expect("bounded rational");
    let keep = bernoulli_set(horizon, seed, STREAM_PAIR, |m| {
        if m == 0 {
            0.0
        } else if b > 0.0 {
            b
        } else {
            (m as f64).powf(-0.2)
        }
    });
    intersect(&keep, &t)
}

/// `|{n ∈ X : n >= n0, n ∉ S2}|`.
pub fn coverage_gap(s2: &FiniteIntegerSet, x: &FiniteIntegerSet, n0: usize) -> Result<usize> {
    Ok(x.missing_from(s2, n0)?.len())
}
