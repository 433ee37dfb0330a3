//! Maps between integer sets used to move density tuples around:
//! floor scaling by `θ > 1`, dilation by `q`, and the progression
//! `U = {0, …, r−2, r}` with `|jU| = jr`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::integer::{iterated_sumset, FiniteIntegerSet, FixedPointReal};

/// `{0, 1, …, r−2, r}` for `r >= 3`.
pub fn u_progression(r: usize) -> Result<Vec<usize>> {
    if r < 3 {
        return Err(Error::param("r", "must be at least 3"));
    }
    let mut u: Vec<usize> = (0..=r - 2).collect();
    u.push(r);
    Ok(u)
}

/// `|jU|` for `j = 1..=jmax`; fails if any differs from `jr`.
pub fn u_sumset_sizes(r: usize, jmax: usize) -> Result<Vec<usize>> {
    let u = u_progression(r)?;
    let horizon = r * jmax.max(1) + 1;
    let set = FiniteIntegerSet::from_members(horizon, u)?;
    let mut sizes = Vec::with_capacity(jmax);
    for j in 1..=jmax {
        let n = iterated_sumset(&set, j)?.len();
        if n != j * r {
            return Err(Error::Verification(format!("|{j}U| = {n}, expected {}", j * r)));
        }
        sizes.push(n);
    }
    Ok(sizes)
}

/// `{⌊θa⌋ : a ∈ A}` on `[0, ⌊θ(N−1)⌋ + 1)`.
pub fn floor_scale(a: &FiniteIntegerSet, theta: &FixedPointReal) -> Result<FiniteIntegerSet> {
    if !theta.exceeds_one() {
        return Err(Error::param("theta", "must exceed 1"));
    }
    let top = a.horizon().saturating_sub(1) as u64;
    let horizon = to_usize(theta.floor_times(top))? + 1;
    let members: Result<Vec<usize>> = a.members().map(|m| to_usize(theta.floor_times(m as u64))).collect();
    FiniteIntegerSet::from_members(horizon, members?)
}

/// `{qa : a ∈ A}` on `[0, q(N−1) + 1)`.
pub fn dilate(a: &FiniteIntegerSet, q: usize) -> Result<FiniteIntegerSet> {
    if q == 0 {
        return Err(Error::param("q", "must be at least 1"));
    }
    let horizon = q * a.horizon().saturating_sub(1) + 1;
    FiniteIntegerSet::from_members(horizon, a.members().map(|m| q * m))
}

/// Whether `Σ⌊θaᵢ⌋ = ⌊θΣaᵢ⌋` for every multiset of `m` elements.
/// Returns the first failing multiset, if any.
pub fn floor_additive(elements: &[usize], theta: &FixedPointReal, m: usize) -> Option<Vec<usize>> {
    let mut idx = vec![0usize; m];
    if elements.is_empty() || m == 0 {
        return None;
    }
    loop {
        let pick: Vec<usize> = idx.iter().map(|&i| elements[i]).collect();
        let lhs: BigInt = pick.iter().map(|&x| theta.floor_times(x as u64)).sum();
        let rhs = theta.floor_times(pick.iter().sum::<usize>() as u64);
        if lhs != rhs {
            return Some(pick);
        }
        // Next nondecreasing index tuple.
        let mut p = m;
        while p > 0 && idx[p - 1] == elements.len() - 1 {
            p -= 1;
        }
        if p == 0 {
            return None;
        }
        let v = idx[p - 1] + 1;
        for slot in &mut idx[p - 1..] {
            *slot = v;
        }
    }
}

fn to_usize(n: BigInt) -> Result<usize> {
    n.to_usize()
        .ok_or_else(|| Error::param("horizon", "scaled set does not fit in memory"))
}
