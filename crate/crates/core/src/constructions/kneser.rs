//! Density pairs `(α, β)` with `β < 2α` in the integers.
//!
//! Such a pair is realizable iff `β = (2r − 1)/g` for the least `g` with `gβ`
//! odd and `β/2 < α <= r/g`. A realization is `R + g·B` with
//! `R = {0, …, r−1}` and `B` a random set of density `γ = αg/r` whose
//! doubling has density one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::WitnessRecipe;
use crate::error::{Error, Result};
use crate::integer::FiniteIntegerSet;
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KneserReason {
    Feasible,
    InfeasibleDyadic,
    InfeasibleRange,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KneserCertificate {
    pub feasible: bool,
    pub reason: KneserReason,
    pub g0: Option<u64>,
    pub r: Option<u64>,
}

impl KneserCertificate {
    fn new(reason: KneserReason, g0: Option<u64>, r: Option<u64>) -> Self {
        Self {
            feasible: reason == KneserReason::Feasible,
            reason,
            g0,
            r,
        }
    }
}

pub fn kneser_feasibility(alpha: &Rational, beta: &Rational) -> Result<KneserCertificate> {
    if alpha <= &Rational::zero() || beta >= &int(1) || beta <= &Rational::zero() {
        return Err(Error::param("alpha, beta", "need α > 0 and 0 < β < 1"));
    }
    if beta >= &(alpha * int(2)) {
        return Ok(KneserCertificate::new(KneserReason::NotApplicable, None, None));
    }
    let (p, q) = (beta.numer(), beta.denom());
    // gβ = g·p/q is an odd integer iff q | g, p odd and g/q odd.
    if p.is_even() {
        return Ok(KneserCertificate::new(KneserReason::InfeasibleDyadic, None, None));
    }
    let g0 = q
        .to_u64()
        .ok_or_else(|| Error::param("beta", "denominator too large"))?;
    let r_big: BigInt = (p + 1) / 2;
    let r = r_big.to_u64().expect("r < g0");
    let upper = Rational::new(r_big, q.clone());
    let reason = if alpha > &(beta / int(2)) && alpha <= &upper {
        KneserReason::Feasible
    } else {
        KneserReason::InfeasibleRange
    };
    Ok(KneserCertificate::new(reason, Some(g0), Some(r)))
}

/// `R + g·B` on `[0, horizon)`.
pub fn rational_witness(
    alpha: &Rational,
    beta: &Rational,
    horizon: usize,
    seed: u64,
) -> Result<(WitnessRecipe, FiniteIntegerSet)> {
    let cert = kneser_feasibility(alpha, beta)?;
    if !cert.feasible {
        return Err(Error::Infeasible(cert));
    }
    let (g, r) = (cert.g0.expect("feasible"), cert.r.expect("feasible"));
    let gamma = alpha * int(g as i64) / int(r as i64);
    let set = residue_set(g, r, &gamma, horizon, seed)?;
    Ok((WitnessRecipe::RationalResidue { g, r, gamma, seed }, set))
}

pub(super) fn residue_set(
    g: u64,
    r: u64,
    gamma: &Rational,
    horizon: usize,
    seed: u64,
) -> Result<FiniteIntegerSet> {
    if g == 0 || r == 0 || r > g {
        return Err(Error::param("g, r", "need 1 <= r <= g"));
    }
    let g = g as usize;
    let base_horizon = horizon.div_ceil(g).max(2);
    let base = crate::random::sample_pair_set(
        &crate::integer::FixedPointReal::from_integer(1),
        gamma,
        base_horizon,
        seed,
    )?;
    let mut members = Vec::with_capacity(base.len() * r as usize);
    for b in base.members() {
        for x in 0..r as usize {
            let n = x + g * b;
            if n < horizon {
                members.push(n);
            }
        }
    }
    FiniteIntegerSet::from_members(horizon, members)
}
