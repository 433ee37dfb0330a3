//! Finite unions of closed intervals of the circle `T = R/Z`.
//!
//! A [`TorusSet`] is stored on the fundamental domain `[0, 1]` as sorted,
//! pairwise disjoint, non-touching closed intervals. An arc that crosses the
//! origin is stored as two pieces `[0, a]` and `[b, 1]`; this is the only way
//! two stored intervals may meet (at `0 ≡ 1`).

mod format;
mod sum;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use format::{parse_set_file, SetFile};

/// Closed interval `[lo, hi]` with `0 <= lo < hi <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusInterval {
    lo: Rational,
    hi: Rational,
}

impl TorusInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < Rational::zero() || hi > Rational::one() || lo >= hi {
            return Err(Error::MalformedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for TorusInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Intervals on the real line, before projection to the circle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawIntervalList {
    intervals: Vec<(Rational, Rational)>,
}

impl RawIntervalList {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        if let Some((lo, hi)) = intervals.iter().find(|(lo, hi)| lo >= hi) {
            return Err(Error::MalformedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self { intervals })
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `(lo, hi) ↦ (q·lo, q·hi)`; requires `q > 0`.
    pub fn scale(&self, q: &Rational) -> Result<Self> {
        if q <= &Rational::zero() {
            return Err(Error::param("q", format!("scale factor must be positive, got {q}")));
        }
        Ok(Self {
            intervals: self
                .intervals
                .iter()
                .map(|(lo, hi)| (lo * q, hi * q))
                .collect(),
        })
    }

    pub fn translate(&self, t: &Rational) -> Self {
        Self {
            intervals: self
                .intervals
                .iter()
                .map(|(lo, hi)| (lo + t, hi + t))
                .collect(),
        }
    }

    pub fn push(&mut self, lo: Rational, hi: Rational) -> Result<()> {
        if lo >= hi {
            return Err(Error::MalformedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        self.intervals.push((lo, hi));
        Ok(())
    }
}

pub fn scale_raw(raw: &RawIntervalList, q: &Rational) -> Result<RawIntervalList> {
    raw.scale(q)
}

pub fn translate_raw(raw: &RawIntervalList, t: &Rational) -> RawIntervalList {
    raw.translate(t)
}

/// Finite union of closed intervals of the circle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorusSet {
    intervals: Vec<TorusInterval>,
}

impl TorusSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full() -> Self {
        Self {
            intervals: vec![TorusInterval {
                lo: Rational::zero(),
                hi: Rational::one(),
            }],
        }
    }

    /// Projects arbitrary real-line pairs to the circle.
    pub fn from_pairs(pairs: Vec<(Rational, Rational)>) -> Result<Self> {
        Ok(normalize(&RawIntervalList::new(pairs)?))
    }

    pub fn intervals(&self) -> &[TorusInterval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.intervals.len() == 1
            && self.intervals[0].lo.is_zero()
            && self.intervals[0].hi.is_one()
    }

    pub fn measure(&self) -> Rational {
        let ends = crate::rational::sum_small(self.intervals.iter().map(|iv| &iv.hi));
        let starts = crate::rational::sum_small(self.intervals.iter().map(|iv| &iv.lo));
        ends - starts
    }

    /// Connected components on the circle; an arc split at the origin
    /// counts once.
    pub fn component_count(&self) -> usize {
        let n = self.intervals.len();
        if n >= 2 && self.intervals[0].lo.is_zero() && self.intervals[n - 1].hi.is_one() {
            n - 1
        } else {
            n
        }
    }

    /// Membership of a point of the circle, given by any real representative.
    pub fn contains(&self, x: &Rational) -> bool {
        let y = crate::rational::frac(x);
        self.intervals.iter().any(|iv| iv.contains(&y))
            || (y.is_zero() && self.intervals.last().is_some_and(|iv| iv.hi.is_one()))
    }

    pub fn is_subset_of(&self, other: &TorusSet) -> bool {
        self.intervals.iter().all(|iv| {
            other
                .intervals
                .iter()
                .any(|o| o.lo <= iv.lo && iv.hi <= o.hi)
        })
    }

    pub fn to_raw(&self) -> RawIntervalList {
        RawIntervalList {
            intervals: self
                .intervals
                .iter()
                .map(|iv| (iv.lo.clone(), iv.hi.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(intervals: Vec<(Rational, Rational)>) -> Self {
        Self {
            intervals: intervals
                .into_iter()
                .map(|(lo, hi)| TorusInterval { lo, hi })
                .collect(),
        }
    }
}

impl fmt::Display for TorusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

/// Reduces every raw interval mod 1 (splitting at integers), then sorts and
/// merges overlapping or touching pieces.
pub fn normalize(raw: &RawIntervalList) -> TorusSet {
    if let Some(set) = normalize_on_grid(raw) {
        return set;
    }
    let one = Rational::one();
    let mut pieces: Vec<(Rational, Rational)> = Vec::with_capacity(raw.len() + 1);
    let zero = Rational::zero();
    for (lo, hi) in raw.intervals() {
        if lo >= &zero && hi <= &one {
            if lo.is_zero() && hi.is_one() {
                return TorusSet::full();
            }
            pieces.push((lo.clone(), hi.clone()));
            continue;
        }
        if hi - lo >= one {
            return TorusSet::full();
        }
        let shift = lo.floor();
        let lo = lo - &shift;
        let hi = hi - &shift;
        if hi <= one {
            pieces.push((lo, hi));
        } else {
            pieces.push((lo, one.clone()));
            pieces.push((Rational::zero(), hi - &one));
        }
    }
    pieces.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(pieces.len());
    for (lo, hi) in pieces {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    TorusSet::from_sorted_unchecked(merged)
}

/// [`normalize`] on scaled `i128` numerators, when the common denominator
/// is below `2^60`.
fn normalize_on_grid(raw: &RawIntervalList) -> Option<TorusSet> {
    use crate::rational::{as_i128, common_denominator, ratio_i128};
    use num_traits::ToPrimitive;
    let d = common_denominator(raw.intervals().iter().flat_map(|(a, b)| [a, b]))
        .to_i128()
        .filter(|d| *d < 1i128 << 60)?;
    let mut pieces: Vec<(i128, i128)> = Vec::with_capacity(raw.len() + 1);
    for (lo, hi) in raw.intervals() {
        let (ln, ld) = as_i128(lo)?;
        let (hn, hd) = as_i128(hi)?;
        let (lo, hi) = (ln.checked_mul(d / ld)?, hn.checked_mul(d / hd)?);
        if hi - lo >= d {
            return Some(TorusSet::full());
        }
        let shift = lo.div_euclid(d) * d;
        let (lo, hi) = (lo - shift, hi - shift);
        if hi <= d {
            pieces.push((lo, hi));
        } else {
            pieces.push((lo, d));
            pieces.push((0, hi - d));
        }
    }
    pieces.sort_unstable();
    let mut merged: Vec<(i128, i128)> = Vec::with_capacity(pieces.len());
    for (lo, hi) in pieces {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => merged.push((lo, hi)),
        }
    }
    Some(TorusSet::from_sorted_unchecked(
        merged
            .into_iter()
            .map(|(lo, hi)| (ratio_i128(lo, d), ratio_i128(hi, d)))
            .collect(),
    ))
}

pub fn measure(a: &TorusSet) -> Rational {
    a.measure()
}

pub fn component_count(a: &TorusSet) -> usize {
    a.component_count()
}

pub use sum::minkowski_sum;

/// k-fold Minkowski sum `kA`; `k = 0` is rejected.
pub fn iterated_sumset(a: &TorusSet, k: usize) -> Result<TorusSet> {
    if k == 0 {
        return Err(Error::param("k", "iterated sumset needs k >= 1"));
    }
    let mut acc = a.clone();
    for _ in 1..k {
        if acc.is_full() {
            break;
        }
        acc = minkowski_sum(&acc, a);
    }
    Ok(acc)
}

/// `[μ(A), μ(2A), …, μ(kmax·A)]`.
pub fn sumset_profile(a: &TorusSet, kmax: usize) -> Result<Vec<Rational>> {
    if kmax == 0 {
        return Err(Error::param("kmax", "profile needs kmax >= 1"));
    }
    let mut out = Vec::with_capacity(kmax);
    let mut acc = a.clone();
    out.push(acc.measure());
    for _ in 1..kmax {
        if !acc.is_full() {
            acc = minkowski_sum(&acc, a);
        }
        out.push(acc.measure());
    }
    Ok(out)
}
