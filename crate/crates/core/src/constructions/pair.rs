//! Circle sets with prescribed `(μ(A), μ(2A))`.
//!
//! * `β = min(2α, 1)`: the interval `[0, α]`.
//! * `β > 2α`, thickened progression: `[0, x] ∪ ⋃_{i=2..k} [ix − ε, ix]` has
//!   measure `x + (k−1)ε` and doubling `[0, (k+1)x] ∪ ⋃_{j=k+2..2k} [jx − 2ε, jx]`
//!   of measure `(k+1)x + 2(k−1)ε` as long as `ε <= x/2` and `2kx <= 1`.
//! * otherwise `[0, a] ∪ (β/2)·C₃(d)`: the scaled Cantor prefix already
//!   doubles to `[0, β]`, and `[0, a]` tops the measure up to `α`.

use num_traits::{One, Zero};

use super::WitnessRecipe;
use crate::error::{Error, Result};
use crate::rational::{as_i128, int, ratio_i128, Rational};
use crate::torus::{normalize, scale_raw, sumset_profile, RawIntervalList, TorusSet};

/// Left endpoints, in units of `m^-d`, of the depth-`d` Cantor prefix
/// with ratio `1/m`, and `m^d`; `None` when `m^d` overflows.
fn cantor_lefts(m: u32, depth: u32) -> Option<(Vec<i128>, i128)> {
    let den = (m as i128).checked_pow(depth)?;
    if den > 1i128 << 100 {
        return None;
    }
    let mut lefts = vec![0i128];
    let mut len = den;
    for _ in 0..depth {
        let next_len = len / m as i128;
        lefts = lefts
            .iter()
            .flat_map(|&l| [l, l + len - next_len])
            .collect();
        len = next_len;
    }
    Some((lefts, den))
}

/// Depth-`d` prefix of the Cantor set with dissection ratio `1/m`, `m >= 3`:
/// `2^d` intervals of length `m^-d`.
pub fn cantor_approx(ratio_denom: u32, depth: u32) -> Result<RawIntervalList> {
    if ratio_denom < 3 {
        return Err(Error::param("ratio_denom", "must be at least 3"));
    }
    if let Some((lefts, den)) = cantor_lefts(ratio_denom, depth) {
        return RawIntervalList::new(
            lefts
                .into_iter()
                .map(|l| (ratio_i128(l, den), ratio_i128(l + 1, den)))
                .collect(),
        );
    }
    let m = int(ratio_denom as i64);
    let mut cur = vec![(Rational::zero(), Rational::one())];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(cur.len() * 2);
        for (a, b) in cur {
            let len = (&b - &a) / &m;
            next.push((a.clone(), &a + &len));
            next.push((&b - &len, b));
        }
        cur = next;
    }
    RawIntervalList::new(cur)
}

/// `(β/2)·C₃(d)` on the circle; `2A = [0, β]` at every depth.
pub fn cantor_pair_witness(beta: &Rational, depth: u32) -> Result<TorusSet> {
    if beta <= &Rational::zero() || beta > &Rational::one() {
        return Err(Error::param("beta", "must lie in (0, 1]"));
    }
    Ok(normalize(&scaled_cantor(beta, depth)?))
}

/// `(β/2)·C₃(d)` as a raw list.
fn scaled_cantor(beta: &Rational, depth: u32) -> Result<RawIntervalList> {
    let half = beta / int(2);
    let grid = cantor_lefts(3, depth).zip(as_i128(&half));
    if let Some(((lefts, den), (p, q))) = grid {
        if let (Some(qd), Some(_)) = (q.checked_mul(den), p.checked_mul(den + 1)) {
            return RawIntervalList::new(
                lefts
                    .into_iter()
                    .map(|l| (ratio_i128(p * l, qd), ratio_i128(p * (l + 1), qd)))
                    .collect(),
            );
        }
    }
    scale_raw(&cantor_approx(3, depth)?, &half)
}

pub(super) fn cantor_hybrid(a: &Rational, beta: &Rational, depth: usize) -> Result<TorusSet> {
    let mut raw = scaled_cantor(beta, depth as u32)?;
    if a > &Rational::zero() {
        raw.push(Rational::zero(), a.clone())?;
    }
    Ok(normalize(&raw))
}

/// A witness with `μ(A) = α`, `μ(2A) = β`, verified exactly.
pub fn pair_witness(alpha: &Rational, beta: &Rational) -> Result<(WitnessRecipe, TorusSet)> {
    let zero = Rational::zero();
    let one = Rational::one();
    if alpha < &zero || alpha > &one || beta > &one {
        return Err(Error::param("alpha, beta", "must lie in [0, 1]"));
    }
    if alpha.is_zero() {
        return Err(Error::param(
            "alpha",
            "measure zero is only reached in the limit; use the Cantor witness",
        ));
    }
    let two_alpha = alpha * int(2);
    let floor = if two_alpha < one { two_alpha.clone() } else { one.clone() };
    if beta < &floor {
        return Err(Error::param(
            "beta",
            format!("must be at least min(2α, 1) = {floor} on the circle"),
        ));
    }
    let recipe = if beta == &floor {
        let set = TorusSet::from_pairs(vec![(zero, alpha.clone())])?;
        WitnessRecipe::IntervalUnion { set }
    } else if let Some((k, x, eps)) = thickening_parameters(alpha, beta) {
        WitnessRecipe::ApThickening { k, x, eps }
    } else {
        let (a, depth) = hybrid_parameters(alpha, beta);
        WitnessRecipe::CantorHybrid {
            a,
            beta: beta.clone(),
            depth,
        }
    };
    let set = recipe.materialize_torus()?;
    let profile = sumset_profile(&set, 2)?;
    if profile != [alpha.clone(), beta.clone()] {
        return Err(Error::Verification(format!(
            "{set} has profile ({}, {}) instead of ({alpha}, {beta})",
            profile[0], profile[1]
        )));
    }
    Ok((recipe, set))
}

/// Smallest `k >= 2` with `ε > 0`, `ε <= x/2` and `2kx <= 1`, where
/// `x = (β − 2α)/(k − 1)` and `ε = (α − x)/(k − 1)`.
fn thickening_parameters(alpha: &Rational, beta: &Rational) -> Option<(usize, Rational, Rational)> {
    let excess = beta - alpha * int(2);
    if excess >= Rational::new(1.into(), 2.into()) {
        return None;
    }
    let rho = beta / alpha;
    // ε > 0  ⇔  k > ρ − 1;   2kx <= 1  ⇔  k >= 1/(1 − 2(β − 2α)).
    let k_eps = (&rho - int(1)).floor() + int(1);
    let k_wrap = (int(1) / (int(1) - excess.clone() * int(2))).ceil();
    let k_rat = [int(2), k_eps, k_wrap].into_iter().max().expect("nonempty");
    let k: usize = k_rat.to_integer().try_into().ok()?;
    let km1 = int(k as i64 - 1);
    let x = &excess / &km1;
    let eps = (alpha - &x) / &km1;
    let ok = eps > Rational::zero()
        && eps <= &x / int(2)
        && int(2 * k as i64) * &x <= int(1);
    ok.then_some((k, x, eps))
}

/// Depth `d` minimal with `(β/2)(2/3)^d < α`, and `a` solving
/// `μ([0, a] ∪ (β/2)C₃(d)) = α`.
fn hybrid_parameters(alpha: &Rational, beta: &Rational) -> (Rational, usize) {
    let half = beta / int(2);
    let mut depth = 0usize;
    let mut m = half.clone();
    while &m >= alpha {
        m = m * Rational::new(2.into(), 3.into());
        depth += 1;
    }
    let (lefts, den) = cantor_lefts(3, depth as u32).expect("depth is small");
    // In units u = (β/2)/3^d the pieces are [l_i, l_i + 1]. With `a` between
    // pieces i−1 and i the measure is a + (2^d − i)u, so t = α/u must lie in
    // [end_{i−1} + 2^d − i, l_i + 2^d − i].
    let unit = &half / Rational::from_integer(den.into());
    let t = alpha / &unit;
    let count = lefts.len() as i128;
    let mut prev_end = 0i128;
    for (i, &l) in lefts.iter().enumerate() {
        let rest = count - i as i128;
        let lo = Rational::from_integer((prev_end + rest).into());
        let hi = Rational::from_integer((l + rest).into());
        if lo <= t && t <= hi {
            return (alpha - &unit * Rational::from_integer(rest.into()), depth);
        }
        prev_end = l + 1;
    }
    (alpha.clone(), depth)
}
