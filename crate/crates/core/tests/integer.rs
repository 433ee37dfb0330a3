use proptest::prelude::*;

use sumset_core::integer::{
    b_lambda, beatty_t, discrepancy_check, discrepancy_check_windowed, iterated_sumset,
    parse_integer_set, representation_count, sumset, sumset_ntt, sumset_shift_or, weyl_average,
    x_theta, Eta, FiniteIntegerSet, FixedPointReal,
};
use sumset_core::piecewise::{f_family, PiecewisePolynomial};
use sumset_core::rational::{int, rat};
use sumset_core::torus::{TorusInterval, TorusSet};

fn members(s: &FiniteIntegerSet) -> Vec<usize> {
    s.members().collect()
}

fn from(n: usize, m: &[usize]) -> FiniteIntegerSet {
    FiniteIntegerSet::from_members(n, m.iter().copied()).unwrap()
}

/// All sums of `k` members (repetition allowed) below `n`.
fn brute_k_fold(a: &[usize], k: usize, n: usize) -> Vec<usize> {
    let mut cur: Vec<bool> = (0..n).map(|x| a.contains(&x)).collect();
    for _ in 1..k {
        let mut next = vec![false; n];
        for (s, &on) in cur.iter().enumerate() {
            if on {
                for &x in a {
                    if s + x < n {
                        next[s + x] = true;
                    }
                }
            }
        }
        cur = next;
    }
    cur.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

fn brute_distinct(a: &[usize], k: usize, n: usize) -> u128 {
    fn go(a: &[usize], k: usize, n: usize) -> u128 {
        if k == 0 {
            return (n == 0) as u128;
        }
        match a.split_first() {
            None => 0,
            Some((&x, rest)) => {
                let with = if x <= n { go(rest, k - 1, n - x) } else { 0 };
                with + go(rest, k, n)
            }
        }
    }
    go(a, k, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncated_sums_match_brute_force(
        n in 2usize..2000,
        raw in prop::collection::vec(0usize..2000, 0..40),
        k in 1usize..4,
    ) {
        let a: Vec<usize> = raw.into_iter().filter(|&x| x < n).collect();
        let s = from(n, &a);
        let mut sorted = a.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(members(&iterated_sumset(&s, k).unwrap()), brute_k_fold(&sorted, k, n));
    }

    #[test]
    fn sumset_algorithms_agree(
        n in 2usize..5000,
        pa in 0.0f64..0.5,
        pb in 0.0f64..0.5,
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let a = FiniteIntegerSet::from_predicate(n, |_| next() < pa);
        let b = FiniteIntegerSet::from_predicate(n, |_| next() < pb);
        let shift = sumset_shift_or(&a, &b);
        prop_assert!(shift == sumset_ntt(&a, &b).unwrap());
        prop_assert!(shift == sumset(&a, &b).unwrap());
        prop_assert!(shift == sumset_shift_or(&b, &a));
    }

    #[test]
    fn representation_count_matches_subsets(
        raw in prop::collection::btree_set(1usize..60, 0..12),
        k in 1usize..4,
        target in 0usize..120,
    ) {
        let a: Vec<usize> = raw.into_iter().collect();
        let s = from(200, &a);
        let got = representation_count(&s, k, target).unwrap();
        prop_assert_eq!(got, brute_distinct(&a, k, target));
        if got > 0 {
            prop_assert!(iterated_sumset(&s, k).unwrap().contains(target));
        }
    }

    #[test]
    fn set_formats_round_trip(n in 1usize..600, raw in prop::collection::vec(0usize..600, 0..50)) {
        let s = from(n, &raw.into_iter().filter(|&x| x < n).collect::<Vec<_>>());
        prop_assert!(parse_integer_set(&s.to_member_text()).unwrap() == s);
        prop_assert!(parse_integer_set(&s.to_bitmap_text()).unwrap() == s);
    }
}

#[test]
fn sumset_examples() {
    let a = from(13, &[1, 3, 5, 6, 8, 10]);
    assert_eq!(members(&sumset(&a, &a).unwrap()), vec![2, 4, 6, 7, 8, 9, 10, 11, 12]);
    assert!(sumset(&FiniteIntegerSet::empty(13), &a).unwrap().is_empty());
    assert!(sumset(&a, &FiniteIntegerSet::empty(12)).is_err());
}

#[test]
fn counting_and_densities() {
    let all = FiniteIntegerSet::range(101, 1, 101);
    assert_eq!(all.counting(100), 100);
    let evens = FiniteIntegerSet::from_predicate(100, |n| n % 2 == 0);
    assert_eq!(evens.tail_density(0, 100).unwrap(), rat(49, 100));
    assert_eq!(evens.window_density(0, 100).unwrap(), 0.5);
    let a = from(11, &[1, 3, 5, 6, 8, 10]);
    assert_eq!(a.tail_density(0, 10).unwrap(), rat(3, 5));
    assert!(a.tail_density(5, 5).is_err());
}

#[test]
fn beatty_examples() {
    let s2 = FixedPointReal::sqrt2();
    assert_eq!(members(&beatty_t(1, &s2, 11).unwrap()), vec![1, 3, 5, 6, 8, 10]);
    assert_eq!(members(&beatty_t(2, &s2, 4).unwrap()), vec![3]);
    for k in 1..4 {
        assert_eq!(members(&beatty_t(k, &FixedPointReal::from_integer(2), 5).unwrap()), vec![1, 2, 3, 4]);
    }
}

#[test]
fn beatty_density_follows_weyl() {
    let n = 200_000usize;
    for (k, theta) in [(1, FixedPointReal::sqrt2()), (2, FixedPointReal::golden()), (3, FixedPointReal::sqrt2())] {
        let t = beatty_t(k, &theta, n).unwrap();
        let d = t.window_density(n / 2, n).unwrap();
        let eta = (2.0 / n as f64).sqrt();
        assert!((d - 1.0 / (k as f64 + 1.0)).abs() <= 3.0 * eta, "k = {k}: {d}");
    }
}

#[test]
fn b_lambda_examples() {
    let s2 = FixedPointReal::sqrt2();
    assert_eq!(members(&b_lambda(&TorusSet::full(), &s2, 6)), vec![1, 2, 3, 4, 5]);
    let half = TorusSet::from_pairs(vec![(rat(0, 1), rat(1, 2))]).unwrap();
    assert_eq!(members(&b_lambda(&half, &s2, 11)), vec![1, 3, 5, 6, 8, 10]);
    assert!(b_lambda(&TorusSet::empty(), &s2, 11).is_empty());
}

#[test]
fn x_theta_examples() {
    let s2 = FixedPointReal::sqrt2();
    let x = x_theta(&s2, &Eta::default(), 1_000_000);
    assert!(!x.contains(50));
    // 2η(n/2) >= 1/2 for n <= 32, so nothing that small qualifies.
    assert!(x.members().all(|n| n > 32));
    assert!(x.window_density(100_000, 1_000_000).unwrap() >= 0.99);
    assert!(Eta::new(1.0, 0.6).is_err());
    assert!(Eta::new(0.5, 0.5).is_err());
    assert!(Eta::parse("0.25").is_ok());
}

#[test]
fn discrepancy_examples() {
    let full = TorusInterval::new(rat(0, 1), rat(1, 1)).unwrap();
    let p = discrepancy_check(&FixedPointReal::sqrt2(), &full, 500, 5).unwrap();
    assert_eq!(p.lhs, 0.0);
    let golden = FixedPointReal::golden();
    let half = TorusInterval::new(rat(0, 1), rat(1, 2)).unwrap();
    let p = discrepancy_check(&golden, &half, 1000, 10).unwrap();
    assert!(p.holds(), "{} > {}", p.lhs, p.bound);
    for offset in [1u64, 777, 123_456] {
        let w = discrepancy_check_windowed(&golden, &half, 1000, 10, offset).unwrap();
        assert!(w.holds());
        assert_eq!(w.offset, offset);
    }
    assert!(discrepancy_check(&golden, &half, 0, 10).is_err());
}

#[test]
fn weyl_averages() {
    let s2 = FixedPointReal::sqrt2();
    let half = PiecewisePolynomial::indicator(rat(0, 1), rat(1, 2)).unwrap();
    assert!((weyl_average(&half, &s2, 100_000, 0) - 0.5).abs() < 0.01);
    let f2 = f_family(2).unwrap().pop().unwrap();
    assert!((weyl_average(&f2, &s2, 100_000, 0) - 1.0 / 9.0).abs() < 0.01);
    let one = PiecewisePolynomial::constant(int(1));
    assert_eq!(weyl_average(&one, &s2, 12_345, 67), 1.0);
}

#[test]
fn representation_examples() {
    let a = from(10, &[1, 2, 3]);
    assert_eq!(representation_count(&a, 2, 5).unwrap(), 1);
    assert_eq!(representation_count(&a, 2, 2).unwrap(), 0);
    assert_eq!(representation_count(&from(10, &[1, 2, 3, 4]), 3, 9).unwrap(), 1);
    assert!(representation_count(&a, 2, 10).is_err());
}
