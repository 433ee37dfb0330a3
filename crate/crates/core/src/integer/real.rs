//! Real multipliers `θ` for Beatty-type sets.
//!
//! A [`FixedPointReal`] keeps `frac(θ)` as a 128-bit fixed-point value,
//! rounded down, next to an exact description of `θ` (a rational or a
//! quadratic surd `(a + b√d)/c`). For `n <= 2^40`, `n·frac` taken mod `2^128`
//! is within `n·2^-128 < 2^-88` of `frac(θn)`; comparisons against a
//! rational endpoint fall back to exact integer arithmetic only inside that
//! error window.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_fixed128, Rational};

const TWO_POW_128: f64 = 340282366920938463463374607431768211456.0;

/// `(a + b·√d) / c` with `c > 0`, `b != 0` and `d > 1` square-free enough
/// that `√d` is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if c <= 0 || b == 0 || d <= 1 {
            return Err(Error::param("theta", "need c > 0, b != 0, d > 1"));
        }
        let d_big = BigInt::from(d);
        if d_big.sqrt().pow(2) == d_big {
            return Err(Error::param("theta", format!("{d} is a perfect square")));
        }
        Ok(Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d_big,
        })
    }

    /// `floor(s·√d)` for an integer `s`.
    fn floor_sqrt_times(&self, s: &BigInt) -> BigInt {
        let root = (s * s * &self.d).sqrt();
        if s.is_negative() {
            -root - 1
        } else {
            root
        }
    }

    /// `floor(n·θ)`.
    fn floor_times(&self, n: &BigInt) -> BigInt {
        let fl = self.floor_sqrt_times(&(&self.b * n));
        (&self.a * n + fl).div_floor(&self.c)
    }

    /// Sign of `n·θ − t`, never zero for `n != 0`.
    fn cmp_times(&self, n: &BigInt, t: &Rational) -> Ordering {
        // n(a + b√d)/c  vs  u/v   ⇔   v·b·n·√d  vs  c·u − v·a·n
        let (u, v) = (t.numer(), t.denom());
        let lhs = v * &self.b * n;
        let rhs = &self.c * u - v * &self.a * n;
        match (lhs.sign(), rhs.sign()) {
            (Sign::NoSign, _) => BigInt::zero().cmp(&rhs),
            (Sign::Plus, Sign::Minus | Sign::NoSign) => Ordering::Greater,
            (Sign::Minus, Sign::Plus | Sign::NoSign) => Ordering::Less,
            (Sign::Plus, Sign::Plus) => (&lhs * &lhs * &self.d).cmp(&(&rhs * &rhs)),
            (Sign::Minus, Sign::Minus) => (&rhs * &rhs).cmp(&(&lhs * &lhs * &self.d)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (a, b, c, d) = (
            self.a.to_f64().unwrap_or(f64::NAN),
            self.b.to_f64().unwrap_or(f64::NAN),
            self.c.to_f64().unwrap_or(f64::NAN),
            self.d.to_f64().unwrap_or(f64::NAN),
        );
        (a + b * d.sqrt()) / c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealKind {
    Rational(Rational),
    Quadratic(QuadraticSurd),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReal {
    int_part: BigInt,
    frac: u128,
    kind: RealKind,
    label: Option<&'static str>,
}

impl FixedPointReal {
    pub fn from_rational(r: Rational) -> Self {
        let int_part = r.floor().to_integer();
        let frac = to_fixed128(&(&r - Rational::from_integer(int_part.clone())));
        Self {
            int_part,
            frac,
            kind: RealKind::Rational(r),
            label: None,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The binary value of an `f64`, exactly.
    pub fn from_f64(x: f64) -> Result<Self> {
        Rational::from_float(x)
            .map(Self::from_rational)
            .ok_or_else(|| Error::param("theta", format!("{x} is not finite")))
    }

    pub fn quadratic(surd: QuadraticSurd) -> Self {
        let one = BigInt::one();
        let int_part = surd.floor_times(&one);
        let scale = BigInt::one() << 128u32;
        let scaled = surd.floor_times(&scale);
        let frac = (scaled - &int_part * &scale)
            .to_u128()
            .expect("fractional part lies in [0, 2^128)");
        Self {
            int_part,
            frac,
            kind: RealKind::Quadratic(surd),
            label: None,
        }
    }

    pub fn sqrt2() -> Self {
        let mut r = Self::quadratic(QuadraticSurd::new(0, 1, 1, 2).expect("valid surd"));
        r.label = Some("sqrt2");
        r
    }

    pub fn golden() -> Self {
        let mut r = Self::quadratic(QuadraticSurd::new(1, 1, 2, 5).expect("valid surd"));
        r.label = Some("golden");
        r
    }

    /// Accepts `sqrt2`, `golden`, `sqrtD`, an integer, `p/q` or a decimal.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "sqrt2" => return Ok(Self::sqrt2()),
            "golden" | "phi" => return Ok(Self::golden()),
            _ => {}
        }
        if let Some(d) = t.strip_prefix("sqrt") {
            let d: i64 = d
                .trim_matches(|c| c == '(' || c == ')')
                .parse()
                .map_err(|_| Error::param("theta", format!("cannot parse `{s}`")))?;
            return Ok(Self::quadratic(QuadraticSurd::new(0, 1, 1, d)?));
        }
        parse_rational(t).map(Self::from_rational)
    }

    pub fn kind(&self) -> &RealKind {
        &self.kind
    }

    pub fn int_part(&self) -> &BigInt {
        &self.int_part
    }

    pub fn frac_bits(&self) -> u128 {
        self.frac
    }

    pub fn is_integer(&self) -> bool {
        matches!(&self.kind, RealKind::Rational(r) if r.is_integer())
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self.kind, RealKind::Quadratic(_))
    }

    pub fn to_f64(&self) -> f64 {
        match &self.kind {
            RealKind::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            RealKind::Quadratic(q) => q.to_f64(),
        }
    }

    /// `frac(θn)` in 128-bit fixed point (approximate, see module docs).
    #[inline]
    pub fn frac_fixed(&self, n: u64) -> u128 {
        self.frac.wrapping_mul(n as u128)
    }

    #[inline]
    pub fn frac_f64(&self, n: u64) -> f64 {
        self.frac_fixed(n) as f64 / TWO_POW_128
    }

    /// Exact `floor(θn)`.
    pub fn floor_times(&self, n: u64) -> BigInt {
        match &self.kind {
            RealKind::Rational(r) => (r * Rational::from_integer(n.into())).floor().to_integer(),
            RealKind::Quadratic(q) => q.floor_times(&BigInt::from(n)),
        }
    }

    /// `θ > 1`.
    pub fn exceeds_one(&self) -> bool {
        self.int_part > BigInt::one() || (self.int_part.is_one() && !self.is_integer())
    }

    /// Exact `frac(θn)` when `θ` is rational.
    pub fn frac_exact(&self, n: u64) -> Option<Rational> {
        match &self.kind {
            RealKind::Rational(r) => {
                let x = r * Rational::from_integer(n.into());
                Some(&x - x.floor())
            }
            RealKind::Quadratic(_) => None,
        }
    }

    /// Exact comparison of `frac(θn)` with a rational endpoint `e` in `[0, 1]`.
    pub fn cmp_frac(&self, n: u64, e: &Endpoint) -> Ordering {
        if e.is_one {
            return Ordering::Less;
        }
        let f = self.frac_fixed(n);
        let margin = n as u128 + 2;
        if let Some(top) = f.checked_add(margin) {
            if top <= e.fixed {
                return Ordering::Less;
            }
            if e.fixed.checked_add(margin).is_some_and(|lo| f >= lo) {
                return Ordering::Greater;
            }
        }
        self.cmp_frac_exact(n, &e.value)
    }

    fn cmp_frac_exact(&self, n: u64, e: &Rational) -> Ordering {
        match &self.kind {
            RealKind::Rational(_) => self.frac_exact(n).expect("rational").cmp(e),
            RealKind::Quadratic(q) => {
                let n = BigInt::from(n);
                let fl = Rational::from_integer(q.floor_times(&n));
                q.cmp_times(&n, &(fl + e))
            }
        }
    }
}

impl fmt::Display for FixedPointReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.label {
            return write!(f, "{l}");
        }
        match &self.kind {
            RealKind::Rational(r) => write!(f, "{r}"),
            RealKind::Quadratic(q) => write!(f, "({} + {}*sqrt({}))/{}", q.a, q.b, q.d, q.c),
        }
    }
}

/// A rational point of `[0, 1]` prepared for fast comparisons.
#[derive(Clone, Debug)]
pub struct Endpoint {
    value: Rational,
    fixed: u128,
    is_one: bool,
}

impl Endpoint {
    pub fn new(value: Rational) -> Self {
        let is_one = value.is_one();
        let fixed = to_fixed128(&value);
        Self {
            value,
            fixed,
            is_one,
        }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }
}
