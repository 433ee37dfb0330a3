use num_traits::{One, Zero};
use proptest::prelude::*;

use sumset_core::piecewise::{
    beta_ref, big_f, f_family, lambda_k, solve_c, zeta_ref, FkEngine, PiecewisePolynomial,
};
use sumset_core::rational::{int, rat};
use sumset_core::Rational;

const PI: f64 = std::f64::consts::PI;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn family_properties(k in 1usize..=6, num in 0i64..=997) {
        let fam = f_family(k).unwrap();
        prop_assert_eq!(fam.len(), k);
        let x = rat(num, 997);
        let l = rat(1, k as i64 + 1);
        for (i, f) in fam.iter().enumerate().skip(1) {
            let j = i as i64 + 1;
            let end = &l * int(j);
            let v = f.evaluate(&x);
            prop_assert!(v >= Rational::zero());
            if x >= end || x.is_zero() {
                prop_assert!(v.is_zero());
            } else {
                prop_assert!(v > Rational::zero());
                prop_assert_eq!(f.evaluate(&(&end - &x)), v);
            }
            for b in 1..f.breaks().len() - 1 {
                let (left, right) = f.one_sided_limits(b);
                prop_assert_eq!(left, right);
            }
            let want = Rational::one() / int(k as i64 + 1).pow(j as i32);
            prop_assert_eq!(f.integral(), want);
        }
    }
}

#[test]
fn algebra_examples() {
    assert_eq!(PiecewisePolynomial::constant(int(1)).evaluate(&rat(1, 3)), int(1));
    let f2 = f_family(2).unwrap().remove(1);
    assert_eq!(f2.evaluate(&rat(1, 3)), rat(1, 3));
    assert_eq!(f2.evaluate(&rat(5, 6)), Rational::zero());
    assert_eq!(f2.integral(), rat(1, 9));
    assert_eq!(f2.antiderivative().evaluate(&rat(2, 3)), rat(1, 9));

    let step = PiecewisePolynomial::indicator(Rational::zero(), rat(1, 3)).unwrap();
    let tri = step.convolve_with_indicator(&rat(1, 3)).unwrap();
    for (x, want) in [(rat(1, 6), rat(1, 6)), (rat(1, 3), rat(1, 3)), (rat(1, 2), rat(1, 6)), (rat(3, 4), int(0))] {
        assert_eq!(tri.evaluate(&x), want, "at {x}");
    }
    assert_eq!(tri.integral(), step.integral() * rat(1, 3));
    let zero = PiecewisePolynomial::zero().convolve_with_indicator(&rat(1, 3)).unwrap();
    assert!(zero.integral().is_zero());
}

#[test]
fn lambda_values() {
    assert!((lambda_k(1).unwrap().value - 1.0).abs() < 1e-14);
    let l2 = lambda_k(2).unwrap();
    assert!((l2.value - PI / 2.0).abs() < 1e-12);
    assert!(l2.abs_error_bound <= 1e-12 * l2.value);
    // Γ(1/3)³/3! with Γ(1/3) = 2.678938534707747633...
    assert!((lambda_k(3).unwrap().value - 3.204_328_242_099_28).abs() < 1e-10);
}

#[test]
fn big_f_behaviour() {
    for k in 1..=4 {
        assert!((big_f(k, 0.0, 1e-12).unwrap() - k as f64 / (k as f64 + 1.0)).abs() < 1e-12);
    }
    let grid: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 4.0].iter().map(|&c| big_f(2, c, 1e-12).unwrap()).collect();
    assert!(grid.windows(2).all(|w| w[0] > w[1]));
    let a = 400.0 * PI / 2.0;
    let closed = 2.0 * (1.0 - (-a / 3.0).exp()) / a;
    assert!((big_f(2, 20.0, 1e-12).unwrap() - closed).abs() < 1e-10);
    assert!(big_f(2, 1.0, 0.0).is_err());

    let c: f64 = 0.05;
    let drop = 2.0 / 3.0 - big_f(2, c, 1e-14).unwrap();
    let first = PI / 2.0 * c * c / 9.0;
    assert!((drop / first - 1.0).abs() < 0.1);
}

#[test]
fn solve_c_round_trips() {
    let engine = FkEngine::new(2).unwrap();
    let tol = 1e-9;
    let target = engine.big_f(1.0, tol / 10.0).unwrap();
    let c = solve_c(2, target, tol).unwrap();
    assert!((engine.big_f(c, tol / 10.0).unwrap() - target).abs() <= 2.0 * tol);
    assert!((c - 1.0).abs() < 1e-4);
    let small = solve_c(2, 2.0 / 3.0 - 1e-6, tol).unwrap();
    assert!(small < 0.1);
    assert!(solve_c(2, 2.0 / 3.0, tol).is_err());
    for k in 2..=4 {
        let e = FkEngine::new(k).unwrap();
        let t = 0.3 * e.ceiling();
        let c = e.solve_c(t, tol).unwrap();
        assert!((e.big_f(c, tol / 10.0).unwrap() - t).abs() <= 2.0 * tol, "k = {k}");
    }
}

#[test]
fn reference_values() {
    assert!((beta_ref(0.5, 0.5).unwrap().value - PI).abs() < 1e-10);
    assert!((beta_ref(1.0, 1.0).unwrap().value - 1.0).abs() < 1e-12);
    assert!((zeta_ref(2.0).unwrap().value - PI * PI / 6.0).abs() < 1e-10);
    assert!((zeta_ref(1.5).unwrap().value - 2.612_375_348_685_488).abs() < 1e-10);
    assert!(beta_ref(0.0, 1.0).is_err());
    assert!(zeta_ref(1.0).is_err());
}
