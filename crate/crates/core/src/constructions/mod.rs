//! Explicit sets realizing prescribed measure or density tuples, and the
//! feasibility test for deficient doubling in the integers.

mod kneser;
mod pair;
mod reduction;
mod triplet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integer::FiniteIntegerSet;
use crate::rational::{as_i128, ratio_i128, serde_str, Rational};
use crate::torus::{normalize, RawIntervalList, TorusSet};

pub use kneser::{kneser_feasibility, rational_witness, KneserCertificate, KneserReason};
pub use pair::{cantor_approx, cantor_pair_witness, pair_witness};
pub use reduction::{dilate, floor_additive, floor_scale, u_progression, u_sumset_sizes};
pub use triplet::{
    region_closure_contains, region_scan, triplet_region_contains, triplet_witness, RegionRow,
    TripletBranch,
};

/// How a witness set was built; enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum WitnessRecipe {
    IntervalUnion {
        set: TorusSet,
    },
    #[serde(rename = "APThickening")]
    ApThickening {
        k: usize,
        #[serde(with = "serde_str")]
        x: Rational,
        #[serde(with = "serde_str")]
        eps: Rational,
    },
    CantorHybrid {
        #[serde(with = "serde_str")]
        a: Rational,
        #[serde(with = "serde_str")]
        beta: Rational,
        depth: usize,
    },
    RationalResidue {
        g: u64,
        r: u64,
        #[serde(with = "serde_str")]
        gamma: Rational,
        seed: u64,
    },
    PseudoPower {
        k: usize,
        c: f64,
        theta: String,
        seed: u64,
    },
}

impl WitnessRecipe {
    /// Rebuilds a circle witness.
    pub fn materialize_torus(&self) -> Result<TorusSet> {
        match self {
            WitnessRecipe::IntervalUnion { set } => Ok(set.clone()),
            WitnessRecipe::ApThickening { k, x, eps } => {
                if let Some(set) = ap_on_grid(*k, x, eps) {
                    return Ok(set);
                }
                let mut raw = RawIntervalList::default();
                raw.push(Rational::zero(), x.clone())?;
                for i in 2..=*k {
                    let end = x * Rational::from_integer((i as i64).into());
                    raw.push(&end - eps, end)?;
                }
                Ok(normalize(&raw))
            }
            WitnessRecipe::CantorHybrid { a, beta, depth } => pair::cantor_hybrid(a, beta, *depth),
            _ => Err(Error::param("recipe", "describes an integer set")),
        }
    }

    /// Rebuilds an integer witness on `[0, horizon)`.
    pub fn materialize_integer(&self, horizon: usize) -> Result<FiniteIntegerSet> {
        match self {
            WitnessRecipe::RationalResidue { g, r, gamma, seed } => {
                kneser::residue_set(*g, *r, gamma, horizon, *seed)
            }
            WitnessRecipe::PseudoPower { k, c, theta, seed } => {
                let theta = crate::integer::FixedPointReal::parse(theta)?;
                let cfg = crate::random::SamplerConfig::new(*k, *c, theta, horizon, *seed)?;
                Ok(crate::random::sample_restricted(&cfg))
            }
            _ => Err(Error::param("recipe", "describes a circle set")),
        }
    }
}

/// `[0, x] ∪ ⋃_{i=2..k} [ix − ε, ix]` with machine-word numerators.
fn ap_on_grid(k: usize, x: &Rational, eps: &Rational) -> Option<TorusSet> {
    let (xn, xd) = as_i128(x)?;
    let (en, ed) = as_i128(eps)?;
    let d = xd.checked_mul(ed / gcd(xd, ed))?;
    let (xs, es) = (xn.checked_mul(d / xd)?, en.checked_mul(d / ed)?);
    (xs.checked_mul(k as i128)? <= d).then_some(())?;
    let mut raw = vec![(Rational::zero(), ratio_i128(xs, d))];
    raw.extend((2..=k as i128).map(|i| (ratio_i128(i * xs - es, d), ratio_i128(i * xs, d))));
    Some(normalize(&RawIntervalList::new(raw).ok()?))
}

fn gcd(a: i128, b: i128) -> i128 {
    num_integer::Integer::gcd(&a, &b)
}
