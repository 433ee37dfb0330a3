//! Truncated integer sets `A ∩ [0, N)` as bit-vectors, with exact truncated
//! sumsets, counting windows, Beatty-type sets and equidistribution checks.
//!
//! All elements are nonnegative, so `(A + B) ∩ [0, N)` only depends on
//! `A ∩ [0, N)` and `B ∩ [0, N)`: truncated sums are exact.

mod beatty;
mod discrepancy;
mod format;
mod ntt;
mod real;

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use beatty::{b_lambda, beatty_t, x_theta, Eta};
pub use discrepancy::{discrepancy_check, discrepancy_check_windowed, weyl_average, DiscrepancyProfile};
pub use format::parse_integer_set;
pub use real::{Endpoint, FixedPointReal, QuadraticSurd, RealKind};

/// Output words handled per parallel task in the shift-or sumset.
const BLOCK_WORDS: usize = 1 << 12;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteIntegerSet {
    horizon: usize,
    words: Vec<u64>,
}

impl FiniteIntegerSet {
    pub fn empty(horizon: usize) -> Self {
        Self {
            horizon,
            words: vec![0; horizon.div_ceil(64)],
        }
    }

    /// `[lo, hi) ∩ [0, N)`.
    pub fn range(horizon: usize, lo: usize, hi: usize) -> Self {
        Self::from_predicate(horizon, |n| lo <= n && n < hi)
    }

    pub fn from_members(horizon: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(horizon);
        for m in members {
            if m >= horizon {
                return Err(Error::param(
                    "member",
                    format!("{m} is outside the horizon [0, {horizon})"),
                ));
            }
            s.set(m);
        }
        Ok(s)
    }

    pub fn from_predicate(horizon: usize, mut keep: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(horizon);
        for n in 0..horizon {
            if keep(n) {
                s.set(n);
            }
        }
        s
    }

    /// Same as [`from_predicate`](Self::from_predicate), evaluated in
    /// parallel over word blocks when the `parallel` feature is on.
    pub fn from_predicate_sync(horizon: usize, keep: impl Fn(usize) -> bool + Sync) -> Self {
        let word = |i: usize| {
            let mut w = 0u64;
            for b in 0..64 {
                let n = i * 64 + b;
                if n < horizon && keep(n) {
                    w |= 1 << b;
                }
            }
            w
        };
        let count = horizon.div_ceil(64);
        #[cfg(feature = "parallel")]
        let words = {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(word).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let words = (0..count).map(word).collect();
        Self { horizon, words }
    }

    /// Builds a set from raw bit-words; bits at or above the horizon are
    /// cleared.
    pub fn from_words(horizon: usize, mut words: Vec<u64>) -> Result<Self> {
        if words.len() != horizon.div_ceil(64) {
            return Err(Error::param(
                "bitmap",
                format!("{} words cannot hold horizon {horizon}", words.len()),
            ));
        }
        mask_tail(&mut words, horizon);
        Ok(Self { horizon, words })
    }

    fn set(&mut self, n: usize) {
        self.words[n / 64] |= 1 << (n % 64);
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, n: usize) -> bool {
        n < self.horizon && (self.words[n / 64] >> (n % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `|A ∩ [lo, hi)|`, with `hi` clipped to the horizon.
    pub fn window_count(&self, lo: usize, hi: usize) -> usize {
        self.prefix_count(hi.min(self.horizon)) - self.prefix_count(lo.min(self.horizon))
    }

    /// `|A ∩ [0, t)|`.
    fn prefix_count(&self, t: usize) -> usize {
        let full = t / 64;
        let mut c: usize = self.words[..full].iter().map(|w| w.count_ones() as usize).sum();
        if t % 64 != 0 {
            c += (self.words[full] & ((1u64 << (t % 64)) - 1)).count_ones() as usize;
        }
        c
    }

    /// `A(t) = |A ∩ [1, t]|` for `t < N`.
    pub fn counting(&self, t: usize) -> usize {
        self.window_count(1, t + 1)
    }

    /// `(A(n1) − A(n0)) / (n1 − n0)` for `0 <= n0 < n1 <= N`, i.e. the
    /// proportion of `(n0, n1]` covered by `A` (`n1 = N` counts up to `N − 1`).
    pub fn tail_density(&self, n0: usize, n1: usize) -> Result<Rational> {
        if n0 >= n1 || n1 > self.horizon {
            return Err(Error::param(
                "window",
                format!("need 0 <= n0 < n1 <= {}, got ({n0}, {n1})", self.horizon),
            ));
        }
        let c = self.window_count(n0 + 1, n1 + 1);
        Ok(Rational::new((c as i64).into(), ((n1 - n0) as i64).into()))
    }

    /// Proportion of `[lo, hi)` covered by `A`.
    pub fn window_density(&self, lo: usize, hi: usize) -> Result<f64> {
        if lo >= hi || hi > self.horizon {
            return Err(Error::param(
                "window",
                format!("need lo < hi <= {}, got [{lo}, {hi})", self.horizon),
            ));
        }
        Ok(self.window_count(lo, hi) as f64 / (hi - lo) as f64)
    }

    /// `[0, N)` points of `self` missing from `other`, from `from` on.
    pub fn missing_from(&self, other: &Self, from: usize) -> Result<Vec<usize>> {
        check_horizons(self, other)?;
        Ok(self
            .members()
            .filter(|&n| n >= from && !other.contains(n))
            .collect())
    }
}

impl fmt::Debug for FiniteIntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteIntegerSet(N={}, ", self.horizon)?;
        f.debug_set().entries(self.members().take(32)).finish()?;
        if self.len() > 32 {
            write!(f, "…")?;
        }
        write!(f, ")")
    }
}

fn mask_tail(words: &mut [u64], horizon: usize) {
    if horizon % 64 != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (horizon % 64)) - 1;
        }
    }
}

fn check_horizons(a: &FiniteIntegerSet, b: &FiniteIntegerSet) -> Result<()> {
    if a.horizon != b.horizon {
        return Err(Error::HorizonMismatch {
            left: a.horizon,
            right: b.horizon,
        });
    }
    Ok(())
}

/// `(A + B) ∩ [0, N)`.
///
/// Two exact algorithms: OR of the denser operand shifted by each member of
/// the sparser one, or an NTT of the indicator vectors. The cheaper one by
/// operation count is used; both produce identical bits.
pub fn sumset(a: &FiniteIntegerSet, b: &FiniteIntegerSet) -> Result<FiniteIntegerSet> {
    check_horizons(a, b)?;
    let n = a.horizon;
    if a.is_empty() || b.is_empty() {
        return Ok(FiniteIntegerSet::empty(n));
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let shift_cost = small.len() as f64 * a.words.len() as f64;
    let len = (2 * n).next_power_of_two().max(2);
    let ntt_cost = 6.0 * len as f64 * (len as f64).log2();
    if len <= ntt::MAX_LEN && ntt_cost < shift_cost {
        sumset_ntt(a, b)
    } else {
        Ok(sumset_shift_or(small, big))
    }
}

/// Shift-or algorithm; `small` supplies the shifts.
pub fn sumset_shift_or(small: &FiniteIntegerSet, big: &FiniteIntegerSet) -> FiniteIntegerSet {
    let shifts: Vec<usize> = small.members().collect();
    let src = &big.words;
    let mut out = vec![0u64; src.len()];
    let fill = |start: usize, block: &mut [u64]| {
        for &s in &shifts {
            let (q, r) = (s / 64, (s % 64) as u32);
            let end = start + block.len();
            if q >= end {
                break;
            }
            for i in start.max(q)..end {
                let mut w = src[i - q] << r;
                if r > 0 && i > q {
                    w |= src[i - q - 1] >> (64 - r);
                }
                block[i - start] |= w;
            }
        }
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        out.par_chunks_mut(BLOCK_WORDS)
            .enumerate()
            .for_each(|(c, block)| fill(c * BLOCK_WORDS, block));
    }
    #[cfg(not(feature = "parallel"))]
    for (c, block) in out.chunks_mut(BLOCK_WORDS).enumerate() {
        fill(c * BLOCK_WORDS, block);
    }
    mask_tail(&mut out, big.horizon);
    FiniteIntegerSet {
        horizon: big.horizon,
        words: out,
    }
}

/// NTT algorithm; needs `2N <= 2^23`.
pub fn sumset_ntt(a: &FiniteIntegerSet, b: &FiniteIntegerSet) -> Result<FiniteIntegerSet> {
    check_horizons(a, b)?;
    let len = (2 * a.horizon).next_power_of_two().max(2);
    if len > ntt::MAX_LEN {
        return Err(Error::param(
            "horizon",
            format!("{} is too large for the transform path", a.horizon),
        ));
    }
    Ok(FiniteIntegerSet {
        horizon: a.horizon,
        words: ntt::convolve_support(&a.words, &b.words, a.horizon, len),
    })
}

/// `kA ∩ [0, N)` for `k >= 1`.
pub fn iterated_sumset(a: &FiniteIntegerSet, k: usize) -> Result<FiniteIntegerSet> {
    if k == 0 {
        return Err(Error::param("k", "must be at least 1"));
    }
    let mut acc = a.clone();
    for _ in 1..k {
        acc = sumset(&acc, a)?;
    }
    Ok(acc)
}

/// Number of `k`-element subsets of `A` with sum `n`.
pub fn representation_count(a: &FiniteIntegerSet, k: usize, n: usize) -> Result<u128> {
    if n >= a.horizon {
        return Err(Error::param("n", format!("{n} is outside the horizon")));
    }
    // ways[j][s]: j-subsets of the members seen so far with sum s.
    let mut ways = vec![vec![0u128; n + 1]; k + 1];
    ways[0][0] = 1;
    for m in a.members().take_while(|&m| m <= n) {
        for j in (1..=k).rev() {
            for s in (m..=n).rev() {
                let add = ways[j - 1][s - m];
                ways[j][s] = ways[j][s].saturating_add(add);
            }
        }
    }
    Ok(ways[k][n])
}
