//! Minkowski sums of interval unions.
//!
//! `A + B` is the union of the pairwise sums `[a_lo + b_lo, a_hi + b_hi]`.
//! The union is swept in order of left endpoints with one cursor per row
//! interval of the smaller operand; a cursor jumps (by binary search) past
//! every column whose sum would end inside the coverage already emitted, so
//! sums whose result has few components cost far less than `|A|·|B|`.
//!
//! When the common denominator of all endpoints fits in 60 bits the sweep
//! runs on scaled `i128` numerators, otherwise on rationals.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::TorusSet;
use crate::rational::{as_i128, common_denominator, ratio_i128, Rational};

pub fn minkowski_sum(a: &TorusSet, b: &TorusSet) -> TorusSet {
    if a.is_empty() || b.is_empty() {
        return TorusSet::empty();
    }
    if a.is_full() || b.is_full() {
        return TorusSet::full();
    }
    let den = common_denominator(
        a.intervals()
            .iter()
            .chain(b.intervals())
            .flat_map(|iv| [iv.lo(), iv.hi()]),
    );
    match den.to_i128().filter(|d| *d < (1i128 << 60)) {
        Some(d) => sum_on_grid(a, b, d),
        None => sum_exact(a, b),
    }
}

fn scaled(set: &TorusSet, d: i128) -> Vec<(i128, i128)> {
    let big = BigInt::from(d);
    let to = |r: &Rational| -> i128 {
        match as_i128(r) {
            Some((n, q)) => n * (d / q),
            None => (r.numer() * (&big / r.denom()))
                .to_i128()
                .expect("scaled endpoint fits in i128"),
        }
    };
    set.intervals()
        .iter()
        .map(|iv| (to(iv.lo()), to(iv.hi())))
        .collect()
}

fn sum_on_grid(a: &TorusSet, b: &TorusSet, d: i128) -> TorusSet {
    let sa = scaled(a, d);
    let sb = scaled(b, d);
    let line = union_of_sums(&sa, &sb);
    let folded = fold_mod(line, d);
    TorusSet::from_sorted_unchecked(
        folded
            .into_iter()
            .map(|(lo, hi)| (ratio_i128(lo, d), ratio_i128(hi, d)))
            .collect(),
    )
}

fn sum_exact(a: &TorusSet, b: &TorusSet) -> TorusSet {
    let pa: Vec<(Rational, Rational)> = a.to_raw().intervals().to_vec();
    let pb: Vec<(Rational, Rational)> = b.to_raw().intervals().to_vec();
    let line = union_of_sums(&pa, &pb);
    super::normalize(&super::RawIntervalList { intervals: line })
}

/// Sorted, merged union of all pairwise interval sums on the real line.
/// Both inputs must be sorted by left endpoint with increasing right
/// endpoints (true for disjoint sorted intervals).
pub(crate) fn union_of_sums<T>(a: &[(T, T)], b: &[(T, T)]) -> Vec<(T, T)>
where
    T: Ord + Clone,
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (rows, cols) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut cursor = vec![0usize; rows.len()];
    let mut heap: BinaryHeap<Reverse<(T, usize)>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| Reverse((&r.0 + &cols[0].0, i)))
        .collect();

    let mut out: Vec<(T, T)> = Vec::new();
    let mut cur: Option<(T, T)> = None;
    while let Some(Reverse((lo, i))) = heap.pop() {
        let j = cursor[i];
        let hi = &rows[i].1 + &cols[j].1;
        match cur.as_mut() {
            Some(c) if lo <= c.1 => {
                if hi > c.1 {
                    c.1 = hi;
                }
            }
            _ => {
                if let Some(done) = cur.take() {
                    out.push(done);
                }
                cur = Some((lo, hi));
            }
        }
        let reach = &cur.as_ref().expect("current run is open").1;
        let row_hi = &rows[i].1;
        let skip = cols[j + 1..].partition_point(|c| &(row_hi + &c.1) <= reach);
        let next = j + 1 + skip;
        if next < cols.len() {
            cursor[i] = next;
            heap.push(Reverse((&rows[i].0 + &cols[next].0, i)));
        }
    }
    out.extend(cur);
    out
}

/// Folds real-line intervals in `[0, 2d]` onto `[0, d]` and merges.
fn fold_mod(line: Vec<(i128, i128)>, d: i128) -> Vec<(i128, i128)> {
    let mut pieces = Vec::with_capacity(line.len() + 1);
    for (lo, hi) in line {
        if hi - lo >= d {
            return vec![(0, d)];
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
    merged
}
