//! Equidistribution of `frac(θn)`: the two sides of the Erdős–Turán
//! inequality and Weyl averages of piecewise polynomials.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_traits::Zero;
use serde::Serialize;

use super::{Endpoint, FixedPointReal};
use crate::error::{Error, Result};
use crate::piecewise::PiecewisePolynomial;
use crate::rational::{to_f64, Rational};
use crate::torus::TorusInterval;

/// Constant in front of the Erdős–Turán bound.
pub const ERDOS_TURAN_CONSTANT: f64 = 3.0;

#[derive(Clone, Debug, Serialize)]
pub struct DiscrepancyProfile {
    pub n: u64,
    pub m: u64,
    pub offset: u64,
    pub lhs: f64,
    pub bound: f64,
    #[serde(serialize_with = "display")]
    pub theta: FixedPointReal,
    #[serde(serialize_with = "interval")]
    pub interval: TorusInterval,
}

impl DiscrepancyProfile {
    pub fn holds(&self) -> bool {
        self.lhs <= self.bound
    }
}

fn display<S: serde::Serializer>(t: &FixedPointReal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(t)
}

fn interval<S: serde::Serializer>(iv: &TorusInterval, s: S) -> std::result::Result<S::Ok, S::Error> {
    [iv.lo().to_string(), iv.hi().to_string()].serialize(s)
}

pub fn discrepancy_check(
    theta: &FixedPointReal,
    interval: &TorusInterval,
    n: u64,
    m: u64,
) -> Result<DiscrepancyProfile> {
    discrepancy_check_windowed(theta, interval, n, m, 0)
}

/// Same as [`discrepancy_check`] on the shifted block `X < j <= X + N`.
pub fn discrepancy_check_windowed(
    theta: &FixedPointReal,
    interval: &TorusInterval,
    n: u64,
    m: u64,
    offset: u64,
) -> Result<DiscrepancyProfile> {
    if n == 0 || m == 0 {
        return Err(Error::param("n, m", "must both be at least 1"));
    }
    let full = interval.lo().is_zero() && interval.length() == Rational::from_integer(1.into());
    let lo = Endpoint::new(interval.lo().clone());
    let hi = Endpoint::new(interval.hi().clone());
    let zero = Endpoint::new(Rational::zero());
    let origin_in = interval.contains(&Rational::zero());
    let mut hits = 0u64;
    for j in offset + 1..=offset + n {
        let inside = if full {
            true
        } else if !theta.is_irrational() && theta.cmp_frac(j, &zero) == Ordering::Equal {
            origin_in
        } else {
            theta.cmp_frac(j, &lo) != Ordering::Less && theta.cmp_frac(j, &hi) != Ordering::Greater
        };
        hits += inside as u64;
    }
    let lhs = (hits as f64 / n as f64 - to_f64(&interval.length())).abs();

    let mut sum = 0.0;
    for h in 1..=m {
        let degenerate = theta
            .frac_exact(h)
            .is_some_and(|f| f.is_zero());
        let s = if degenerate {
            n as f64
        } else {
            let num = (PI * theta.frac_f64(n * h)).sin();
            let den = (PI * theta.frac_f64(h)).sin();
            (num / den).abs().min(n as f64)
        };
        sum += s / h as f64;
    }
    let bound = ERDOS_TURAN_CONSTANT * (1.0 / (m + 1) as f64 + sum / n as f64);
    Ok(DiscrepancyProfile {
        n,
        m,
        offset,
        lhs,
        bound,
        theta: theta.clone(),
        interval: interval.clone(),
    })
}

/// `(1/N) Σ_{X < n <= X + N} f(frac(θn))`.
pub fn weyl_average(f: &PiecewisePolynomial, theta: &FixedPointReal, n: u64, offset: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let total: f64 = (offset + 1..=offset + n)
        .map(|j| f.eval_f64(theta.frac_f64(j)))
        .sum();
    total / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::piecewise::PiecewisePolynomial;
    use crate::rational::rat;

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> TorusInterval {
        TorusInterval::new(rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    #[test]
    fn full_circle_has_no_discrepancy() {
        let p = discrepancy_check(&FixedPointReal::sqrt2(), &iv((0, 1), (1, 1)), 500, 10).unwrap();
        assert_eq!(p.lhs, 0.0);
        assert!(p.bound > 0.0);
    }

    #[test]
    fn golden_half_interval() {
        let p = discrepancy_check(&FixedPointReal::golden(), &iv((0, 1), (1, 2)), 1000, 10).unwrap();
        assert!(p.holds(), "{p:?}");
        let w = discrepancy_check_windowed(&FixedPointReal::golden(), &iv((1, 5), (2, 3)), 1000, 10, 12345)
            .unwrap();
        assert!(w.holds(), "{w:?}");
    }

    #[test]
    fn rational_theta_hits_degenerate_terms() {
        let p = discrepancy_check(&FixedPointReal::from_rational(rat(1, 3)), &iv((0, 1), (1, 2)), 300, 6)
            .unwrap();
        // frac(n/3) ∈ {0, 1/3, 2/3}: two of three land in [0, 1/2].
        assert!((p.lhs - (2.0 / 3.0 - 0.5)).abs() < 1e-12);
        assert!(p.holds());
    }

    #[test]
    fn weyl_average_of_constants_and_indicators() {
        let one = PiecewisePolynomial::constant(rat(1, 1));
        assert_eq!(weyl_average(&one, &FixedPointReal::sqrt2(), 1000, 0), 1.0);
        let half = PiecewisePolynomial::indicator(rat(0, 1), rat(1, 2)).unwrap();
        let avg = weyl_average(&half, &FixedPointReal::sqrt2(), 100_000, 0);
        assert!((avg - 0.5).abs() < 0.01);
    }
}
