//! Sets of integers selected by the fractional part of `θn`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{Endpoint, FiniteIntegerSet, FixedPointReal};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::torus::TorusSet;

/// Decay function `η(x) = scale · x^(−exponent)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eta {
    scale: f64,
    exponent: f64,
}

impl Default for Eta {
    fn default() -> Self {
        Self {
            scale: 1.0,
            exponent: 0.5,
        }
    }
}

impl Eta {
    /// Rejects functions that dip below `x^(−1/2)` for some `x >= 1`.
    pub fn new(scale: f64, exponent: f64) -> Result<Self> {
        if !(scale.is_finite() && exponent.is_finite()) {
            return Err(Error::param("eta", "parameters must be finite"));
        }
        if scale < 1.0 || !(0.0..=0.5).contains(&exponent) {
            return Err(Error::param(
                "eta",
                format!("{scale}*n^-{exponent} falls below n^-1/2"),
            ));
        }
        Ok(Self { scale, exponent })
    }

    /// Accepts `E` (meaning `n^-E`), `n^-E` or `S*n^-E`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::param("eta", format!("cannot parse `{s}`"));
        let t = s.trim().replace(' ', "");
        let (scale, rest) = match t.split_once('*') {
            Some((a, b)) => (a.parse::<f64>().map_err(|_| bad())?, b.to_string()),
            None => (1.0, t.clone()),
        };
        let exp = match rest.strip_prefix("n^-") {
            Some(e) => e,
            None if t.contains('*') => return Err(bad()),
            None => rest.as_str(),
        };
        let exponent = if let Some((p, q)) = exp.split_once('/') {
            let p: f64 = p.parse().map_err(|_| bad())?;
            let q: f64 = q.parse().map_err(|_| bad())?;
            p / q
        } else {
            exp.parse().map_err(|_| bad())?
        };
        Self::new(scale, exponent)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.scale * x.powf(-self.exponent)
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 1.0 {
            write!(f, "n^-{}", self.exponent)
        } else {
            write!(f, "{}*n^-{}", self.scale, self.exponent)
        }
    }
}

/// `{1 <= n < N : 0 < frac(θn) < 1/(k+1)}`, or all of `[1, N)` when `θ` is an
/// integer.
pub fn beatty_t(k: usize, theta: &FixedPointReal, horizon: usize) -> Result<FiniteIntegerSet> {
    if k == 0 {
        return Err(Error::param("k", "must be at least 1"));
    }
    if theta.is_integer() {
        return Ok(FiniteIntegerSet::range(horizon, 1, horizon));
    }
    let zero = Endpoint::new(Rational::zero());
    let top = Endpoint::new(Rational::new(1.into(), ((k + 1) as i64).into()));
    Ok(FiniteIntegerSet::from_predicate_sync(horizon, |n| {
        n >= 1
            && theta.cmp_frac(n as u64, &zero) == Ordering::Greater
            && theta.cmp_frac(n as u64, &top) == Ordering::Less
    }))
}

/// `{1 <= n < N : frac(λn) ∈ A}`.
pub fn b_lambda(a: &TorusSet, lambda: &FixedPointReal, horizon: usize) -> FiniteIntegerSet {
    if a.is_empty() {
        return FiniteIntegerSet::empty(horizon);
    }
    if a.is_full() {
        return FiniteIntegerSet::range(horizon, 1, horizon);
    }
    let zero = Endpoint::new(Rational::zero());
    let has_origin = a.contains(&Rational::zero());
    let ends: Vec<(Endpoint, Endpoint)> = a
        .intervals()
        .iter()
        .map(|iv| (Endpoint::new(iv.lo().clone()), Endpoint::new(iv.hi().clone())))
        .collect();
    FiniteIntegerSet::from_predicate_sync(horizon, |n| {
        if n == 0 {
            return false;
        }
        let n = n as u64;
        if theta_hits_zero(lambda, n, &zero) {
            return has_origin;
        }
        ends.iter().any(|(lo, hi)| {
            lambda.cmp_frac(n, lo) != Ordering::Less && lambda.cmp_frac(n, hi) != Ordering::Greater
        })
    })
}

fn theta_hits_zero(theta: &FixedPointReal, n: u64, zero: &Endpoint) -> bool {
    !theta.is_irrational() && theta.cmp_frac(n, zero) == Ordering::Equal
}

/// `{1 <= n < N : 2η(n/2) < frac(θn) < 1 − 2η(n/2)}`.
pub fn x_theta(theta: &FixedPointReal, eta: &Eta, horizon: usize) -> FiniteIntegerSet {
    FiniteIntegerSet::from_predicate_sync(horizon, |n| {
        if n == 0 {
            return false;
        }
        let t = 2.0 * eta.eval(n as f64 / 2.0);
        let f = theta.frac_f64(n as u64);
        t < f && f < 1.0 - t
    })
}
