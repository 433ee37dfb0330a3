//! Triplets `(μ(A), μ(2A), μ(3A))` of sets `A = [0, x] ∪ [y, z] ⊂ [0, 1/3]`.
//!
//! With `α = x + z − y` the measures are
//! `β = 3α − (2x − y)⁺ − (x + z − 2y)⁺` and
//! `γ = 6α − (3x − y)⁺ − (2x + z − 2y)⁺ − (2z + x − 3y)⁺`;
//! each branch below fixes which of these overlaps are positive and solves
//! for `(x, y, z)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};
use crate::torus::{normalize, sumset_profile, RawIntervalList, TorusSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TripletBranch {
    /// `[0, α]`, for `β = 2α`, `γ = 3α`.
    SingleInterval,
    /// `2A` and `3A` with two components each, `3A` overlapping at the top.
    TwoA,
    /// `2A = (0, 2x) ∪ (y, 2z)`, `3A` connected.
    TwoB,
    /// `γ = 2β − α` with `2A = (0, x + z) ∪ (2y, 2z)`.
    BoundaryA,
    /// `γ = 2β − α` with `2A = (0, 2x) ∪ (y, 2z)`.
    BoundaryB,
    /// `β = 3α`, `γ = 6α`: no overlaps at all.
    ThreeA,
    /// `β = 3α`, `3A` connected.
    ThreeB,
    /// `β = 3α`, one overlap in `3A` between its first two pieces.
    ThreeC,
}

/// The region `β ∈ [2α, 3α]`, `γ ∈ [3β/2, 2β − α)`, or `β = 3α`,
/// `γ ∈ [3β/2, 2β]`, for `0 <= α <= 1/3` and `γ <= 1`.
pub fn triplet_region_contains(alpha: &Rational, beta: &Rational, gamma: &Rational) -> bool {
    if !basic_range(alpha, gamma) {
        return false;
    }
    let (a2, a3) = (alpha * int(2), alpha * int(3));
    let lo = beta * rat(3, 2);
    let main = &a2 <= beta && beta <= &a3 && &lo <= gamma && gamma < &(beta * int(2) - alpha);
    let line = beta == &a3 && &lo <= gamma && gamma <= &(beta * int(2));
    main || line
}

/// Closure of the region: the upper end `γ = 2β − α` is included.
pub fn region_closure_contains(alpha: &Rational, beta: &Rational, gamma: &Rational) -> bool {
    if !basic_range(alpha, gamma) {
        return false;
    }
    let (a2, a3) = (alpha * int(2), alpha * int(3));
    let lo = beta * rat(3, 2);
    let main = &a2 <= beta && beta <= &a3 && &lo <= gamma && gamma <= &(beta * int(2) - alpha);
    let line = beta == &a3 && &lo <= gamma && gamma <= &(beta * int(2));
    main || line
}

fn basic_range(alpha: &Rational, gamma: &Rational) -> bool {
    alpha >= &Rational::zero() && alpha <= &rat(1, 3) && gamma <= &Rational::one()
}

type Triple = (Rational, Rational, Rational);

fn two_intervals(x: &Rational, y: &Rational, z: &Rational) -> Result<TorusSet> {
    let mut raw = RawIntervalList::default();
    if x > &Rational::zero() {
        raw.push(Rational::zero(), x.clone())?;
    }
    if y < z {
        raw.push(y.clone(), z.clone())?;
    }
    Ok(normalize(&raw))
}

fn ordered(t: &Triple) -> bool {
    let (x, y, z) = t;
    x > &Rational::zero() && x < y && y < z && z <= &rat(1, 3)
}

fn midpoint(lo: Rational, hi: Rational) -> Option<Rational> {
    (lo < hi).then(|| (lo + hi) / int(2))
}

fn max_of(v: impl IntoIterator<Item = Rational>) -> Rational {
    v.into_iter().max().expect("nonempty")
}

fn min_of(v: impl IntoIterator<Item = Rational>) -> Rational {
    v.into_iter().min().expect("nonempty")
}

fn branch_two_a(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    let z = g / int(3);
    let y = a - b + g * rat(2, 3);
    let x = a * int(2) - b + g / int(3);
    let ok = &x * int(2) > y && &x + &z < &y * int(2) && &z * int(2) + &x > &y * int(3);
    let t = (x, y, z);
    (ok && ordered(&t)).then_some(t)
}

fn branch_two_b(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    let y = b - a * int(2);
    let x = b - a - g / int(3);
    let z = g / int(3);
    let ok = &x * int(2) < y && y < &x * int(3) && &x + &z > &y * int(2);
    let t = (x, y, z);
    (ok && ordered(&t)).then_some(t)
}

fn branch_boundary_a(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    if g != &(b * int(2) - a) || b >= &(a * int(3)) {
        return None;
    }
    // y = β − 3α + 2x, z = β − 2α + x.
    let lo = max_of([
        (a * int(4) - b) / int(2),
        (a * int(5) - b) / int(3),
        a * int(3) - b,
        Rational::zero(),
    ]);
    let hi = min_of([a.clone(), rat(1, 3) - b + a * int(2)]);
    let x = midpoint(lo, hi)?;
    let y = b - a * int(3) + &x * int(2);
    let z = b - a * int(2) + &x;
    let t = (x, y, z);
    ordered(&t).then_some(t)
}

fn branch_boundary_b(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    if g != &(b * int(2) - a) || b >= &(a * int(3)) {
        return None;
    }
    // y = β − 2α, z = β − α − x.
    let lo = max_of([Rational::zero(), b - a - rat(1, 3)]);
    let hi = min_of([(b - a * int(2)) / int(3), a * int(4) - b, a.clone()]);
    let x = midpoint(lo, hi)?;
    let y = b - a * int(2);
    let z = b - a - &x;
    let t = (x, y, z);
    ordered(&t).then_some(t)
}

fn branch_three_a(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    if b != &(a * int(3)) || g != &(a * int(6)) {
        return None;
    }
    // x = α/2, z − y = α/2, y ∈ (3α/2, 1/3 − α/2].
    let x = a / int(2);
    let y = midpoint(a * rat(3, 2), rat(1, 3) - a / int(2))?;
    let z = &y + a / int(2);
    let t = (x, y, z);
    ordered(&t).then_some(t)
}

fn branch_three_b(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    if b != &(a * int(3)) {
        return None;
    }
    // z = γ/3, y = x + z − α.
    let z = g / int(3);
    let lo = max_of([a * int(2) - &z, (&z - a) / int(2), Rational::zero()]);
    let hi = min_of([&z - a, (a * int(3) - &z) / int(2)]);
    let x = midpoint(lo, hi)?;
    let y = &x + &z - a;
    let t = (x, y, z);
    ordered(&t).then_some(t)
}

fn branch_three_c(a: &Rational, b: &Rational, g: &Rational) -> Option<Triple> {
    if b != &(a * int(3)) {
        return None;
    }
    // γ = 6α − 3x + y; with t = 6α − γ: y = 3x − t, z = α + 2x − t.
    let t = a * int(6) - g;
    if t <= Rational::zero() || &t >= a {
        return None;
    }
    let lo = max_of([
        t.clone(),
        (a + &t) / int(2),
        (a * int(2) + &t) / int(4),
        (a + &t) / int(3),
    ]);
    let hi = min_of([a.clone(), (rat(1, 3) - a + &t) / int(2)]);
    let x = midpoint(lo, hi)?;
    let y = &x * int(3) - &t;
    let z = a + &x * int(2) - &t;
    let tr = (x, y, z);
    ordered(&tr).then_some(tr)
}

/// A set `[0, x] ∪ [y, z] ⊂ [0, 1/3]` with exact profile `(α, β, γ)`.
///
/// Inputs outside the closed region are rejected; inputs inside it that no
/// branch realizes (the lower boundary `γ = 3β/2` with `β > 2α`) give
/// [`Error::NoTwoIntervalWitness`].
pub fn triplet_witness(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<(TripletBranch, TorusSet)> {
    if !region_closure_contains(alpha, beta, gamma) || alpha <= &Rational::zero() {
        return Err(Error::param(
            "alpha, beta, gamma",
            format!("({alpha}, {beta}, {gamma}) lies outside the two-interval region"),
        ));
    }
    let want = vec![alpha.clone(), beta.clone(), gamma.clone()];
    if beta == &(alpha * int(2)) && gamma == &(alpha * int(3)) {
        let set = two_intervals(alpha, &Rational::zero(), &Rational::zero())?;
        return verified(TripletBranch::SingleInterval, set, &want);
    }
    type Branch = fn(&Rational, &Rational, &Rational) -> Option<Triple>;
    let branches: [(TripletBranch, Branch); 7] = [
        (TripletBranch::TwoA, branch_two_a),
        (TripletBranch::TwoB, branch_two_b),
        (TripletBranch::BoundaryA, branch_boundary_a),
        (TripletBranch::BoundaryB, branch_boundary_b),
        (TripletBranch::ThreeA, branch_three_a),
        (TripletBranch::ThreeB, branch_three_b),
        (TripletBranch::ThreeC, branch_three_c),
    ];
    for (tag, f) in branches {
        if let Some((x, y, z)) = f(alpha, beta, gamma) {
            let set = two_intervals(&x, &y, &z)?;
            if sumset_profile(&set, 3)? == want {
                return Ok((tag, set));
            }
        }
    }
    Err(Error::NoTwoIntervalWitness {
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        gamma: gamma.to_string(),
    })
}

fn verified(tag: TripletBranch, set: TorusSet, want: &[Rational]) -> Result<(TripletBranch, TorusSet)> {
    let got = sumset_profile(&set, 3)?;
    if got != want {
        return Err(Error::Verification(format!("{set} has profile {got:?}")));
    }
    Ok((tag, set))
}

/// One grid point of [`region_scan`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionRow {
    #[serde(with = "crate::rational::serde_str")]
    pub x: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub y: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub z: Rational,
    #[serde(with = "crate::rational::serde_vec")]
    pub profile: Vec<Rational>,
    pub in_region: bool,
}

/// Exact profiles of `[0, x] ∪ [y, z]` for all `0 <= x <= y <= z <= ⌊D/3⌋/D`
/// on the grid `(1/D)Z`, in lexicographic order of `(x, y, z)`.
pub fn region_scan(denominator: u32) -> Result<Vec<RegionRow>> {
    if denominator < 3 {
        return Err(Error::param("denominator", "must be at least 3"));
    }
    let d = denominator as i64;
    let top = d / 3;
    let row = |i: i64| -> Result<Vec<RegionRow>> {
        let mut out = Vec::new();
        for j in i..=top {
            for l in j..=top {
                let (x, y, z) = (rat(i, d), rat(j, d), rat(l, d));
                let set = two_intervals(&x, &y, &z)?;
                let profile = if set.is_empty() {
                    vec![Rational::zero(); 3]
                } else {
                    sumset_profile(&set, 3)?
                };
                let in_region = region_closure_contains(&profile[0], &profile[1], &profile[2]);
                out.push(RegionRow {
                    x,
                    y,
                    z,
                    profile,
                    in_region,
                });
            }
        }
        Ok(out)
    };
    #[cfg(feature = "parallel")]
    let rows: Vec<Result<Vec<RegionRow>>> = {
        use rayon::prelude::*;
        (0..=top).into_par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Result<Vec<RegionRow>>> = (0..=top).map(row).collect();
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_predicate() {
        assert!(triplet_region_contains(&rat(1, 10), &rat(1, 4), &rat(39, 100)));
        assert!(!triplet_region_contains(&rat(1, 10), &rat(1, 4), &rat(1, 2)));
        assert!(triplet_region_contains(&rat(1, 10), &rat(3, 10), &rat(3, 5)));
        assert!(!triplet_region_contains(&rat(1, 10), &rat(1, 4), &rat(2, 5)));
        assert!(region_closure_contains(&rat(1, 10), &rat(1, 4), &rat(2, 5)));
    }

    #[test]
    fn witness_examples() {
        let (b, a) = triplet_witness(&rat(1, 10), &rat(1, 4), &rat(39, 100)).unwrap();
        assert_eq!(b, TripletBranch::TwoA);
        assert_eq!(
            a,
            TorusSet::from_pairs(vec![(rat(0, 1), rat(2, 25)), (rat(11, 100), rat(13, 100))]).unwrap()
        );
        let (b, a) = triplet_witness(&rat(1, 10), &rat(1, 5), &rat(3, 10)).unwrap();
        assert_eq!(b, TripletBranch::SingleInterval);
        assert_eq!(a, TorusSet::from_pairs(vec![(rat(0, 1), rat(1, 10))]).unwrap());
        assert!(matches!(
            triplet_witness(&rat(1, 10), &rat(1, 4), &rat(3, 8)),
            Err(Error::NoTwoIntervalWitness { .. })
        ));
        assert!(matches!(
            triplet_witness(&rat(1, 10), &rat(1, 4), &rat(1, 2)),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn boundary_and_line_branches() {
        let a = rat(1, 10);
        // γ = 2β − α below the β = 3α line.
        let (b, _) = triplet_witness(&a, &rat(27, 100), &rat(44, 100)).unwrap();
        assert!(matches!(b, TripletBranch::BoundaryA | TripletBranch::BoundaryB));
        // β = 3α: γ = 6α, inside (9α/2, 6α), and at 5α.
        let (b, _) = triplet_witness(&a, &rat(3, 10), &rat(3, 5)).unwrap();
        assert_eq!(b, TripletBranch::ThreeA);
        for g in [rat(47, 100), rat(1, 2), rat(11, 20), rat(59, 100)] {
            assert!(triplet_witness(&a, &rat(3, 10), &g).is_ok(), "γ = {g}");
        }
    }

    #[test]
    fn scan_small_grids() {
        let rows = region_scan(3).unwrap();
        assert!(rows.iter().any(|r| r.x == rat(1, 3)
            && r.profile == vec![rat(1, 3), rat(2, 3), rat(1, 1)]));
        let rows = region_scan(12).unwrap();
        let r = rows
            .iter()
            .find(|r| r.x == rat(1, 12) && r.y == rat(2, 12) && r.z == rat(3, 12))
            .unwrap();
        assert_eq!(r.profile, vec![rat(1, 6), rat(1, 2), rat(3, 4)]);
        assert!(rows.iter().all(|r| r.in_region));
    }
}
