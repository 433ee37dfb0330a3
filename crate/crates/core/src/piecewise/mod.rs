//! Piecewise polynomials with rational breakpoints, the `f_j` convolution
//! family, and the numerical layer built on it (`λ_k`, `F_k(c)`, special
//! function references).

mod poly;
mod quad;
mod special;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

pub use poly::Polynomial;
pub use quad::{big_f, solve_c, FkEngine};
pub use special::{beta_ref, gamma_ref, lambda_k, zeta_ref, SpecialValue};

/// Piece `i` is `pieces[i]` on `[breaks[i], breaks[i+1])`; the last piece
/// also covers its right endpoint. The function is 0 outside
/// `[breaks[0], breaks[m]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewisePolynomial {
    breaks: Vec<Rational>,
    pieces: Vec<Polynomial>,
    // f64 coefficients of each piece in the local variable `x − breaks[i]`.
    local: Vec<Vec<f64>>,
    breaks_f64: Vec<f64>,
}

impl PiecewisePolynomial {
    pub fn new(breaks: Vec<Rational>, pieces: Vec<Polynomial>) -> Result<Self> {
        if breaks.len() < 2 || pieces.len() + 1 != breaks.len() {
            return Err(Error::param(
                "pieces",
                format!("{} breakpoints need {} pieces", breaks.len(), breaks.len().saturating_sub(1)),
            ));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param("breaks", "must be strictly ascending"));
        }
        Ok(Self::build(breaks, pieces))
    }

    fn build(breaks: Vec<Rational>, pieces: Vec<Polynomial>) -> Self {
        let local = pieces
            .iter()
            .zip(&breaks)
            .map(|(p, b)| p.shift(b).to_f64())
            .collect();
        let breaks_f64 = breaks.iter().map(to_f64).collect();
        Self {
            breaks,
            pieces,
            local,
            breaks_f64,
        }
    }

    /// `c` on `[0, 1]`.
    pub fn constant(c: Rational) -> Self {
        Self::build(vec![Rational::zero(), Rational::one()], vec![Polynomial::constant(c)])
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// Indicator of `[lo, hi)`, `0 <= lo < hi <= 1`, on `[0, 1]`.
    pub fn indicator(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < Rational::zero() || lo >= hi || hi > Rational::one() {
            return Err(Error::MalformedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        let mut breaks = vec![Rational::zero()];
        let mut pieces = Vec::new();
        if !lo.is_zero() {
            breaks.push(lo.clone());
            pieces.push(Polynomial::zero());
        }
        breaks.push(hi.clone());
        pieces.push(Polynomial::constant(Rational::one()));
        if hi < Rational::one() {
            breaks.push(Rational::one());
            pieces.push(Polynomial::zero());
        }
        Ok(Self::build(breaks, pieces))
    }

    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    fn piece_index(&self, x: &Rational) -> Option<usize> {
        let m = self.breaks.len() - 1;
        if x < &self.breaks[0] || x > &self.breaks[m] {
            return None;
        }
        let i = self.breaks.partition_point(|b| b <= x);
        Some((i - 1).min(m - 1))
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.piece_index(x)
            .map_or_else(Rational::zero, |i| self.pieces[i].eval(x))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let m = self.breaks_f64.len() - 1;
        if !(x >= self.breaks_f64[0] && x <= self.breaks_f64[m]) {
            return 0.0;
        }
        let i = (self.breaks_f64.partition_point(|&b| b <= x) - 1).min(m - 1);
        let t = x - self.breaks_f64[i];
        self.local[i].iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    /// Left and right limits at an interior breakpoint.
    pub fn one_sided_limits(&self, i: usize) -> (Rational, Rational) {
        let x = &self.breaks[i];
        (self.pieces[i - 1].eval(x), self.pieces[i].eval(x))
    }

    /// `x ↦ ∫_{breaks[0]}^x f` on the same breakpoints.
    pub fn antiderivative(&self) -> Self {
        let mut acc = Rational::zero();
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate() {
            let q = p.integral();
            let start = q.eval(&self.breaks[i]);
            let piece = &q + &Polynomial::constant(&acc - &start);
            acc = piece.eval(&self.breaks[i + 1]);
            pieces.push(piece);
        }
        Self::build(self.breaks.clone(), pieces)
    }

    /// `∫_a^b f`, exact, for any `a <= b`.
    pub fn definite_integral(&self, a: &Rational, b: &Rational) -> Rational {
        let big = self.antiderivative();
        big.cumulative(b) - big.cumulative(a)
    }

    pub fn integral(&self) -> Rational {
        let (a, b) = (self.breaks[0].clone(), self.breaks[self.breaks.len() - 1].clone());
        self.definite_integral(&a, &b)
    }

    /// Value of an antiderivative extended by constants outside its domain.
    fn cumulative(&self, t: &Rational) -> Rational {
        let m = self.breaks.len() - 1;
        if t <= &self.breaks[0] {
            return self.pieces[0].eval(&self.breaks[0]);
        }
        if t >= &self.breaks[m] {
            return self.pieces[m - 1].eval(&self.breaks[m]);
        }
        self.evaluate(t)
    }

    /// The polynomial equal to the extended antiderivative on the open
    /// interval `(u, v)`, which must not contain a breakpoint.
    fn cumulative_piece(&self, u: &Rational, v: &Rational) -> Polynomial {
        let m = self.breaks.len() - 1;
        if v <= &self.breaks[0] || u >= &self.breaks[m] {
            let end = if v <= &self.breaks[0] { u } else { v };
            return Polynomial::constant(self.cumulative(end));
        }
        let mid = (u + v) / Rational::from_integer(2.into());
        self.pieces[self.piece_index(&mid).expect("midpoint inside domain")].clone()
    }

    /// `g(x) = F(min(x, cap)) − F(max(x₀, x − L))` where it is positive and 0
    /// elsewhere, `F` the antiderivative of `f` and `x₀` its first
    /// breakpoint. With `cap` at or beyond the support this is `f ∗ 1_[0,L]`.
    pub fn convolve_capped(&self, l: &Rational, cap: &Rational) -> Result<Self> {
        if l <= &Rational::zero() {
            return Err(Error::param("L", "must be positive"));
        }
        let big = self.antiderivative();
        let x0 = self.breaks[0].clone();
        let mut pts: Vec<Rational> = self
            .breaks
            .iter()
            .flat_map(|b| [b.clone(), b + l])
            .chain([cap.clone(), cap + l, &x0 + l, Rational::one()])
            .filter(|p| p >= &x0)
            .collect();
        pts.sort();
        pts.dedup();
        let two = Rational::from_integer(2.into());
        let mut pieces = Vec::with_capacity(pts.len() - 1);
        for w in pts.windows(2) {
            let (u, v) = (&w[0], &w[1]);
            let mid = (u + v) / &two;
            let hi_arg = if &mid < cap { mid.clone() } else { cap.clone() };
            let lo_arg = if &mid - l > x0 { &mid - l } else { x0.clone() };
            if hi_arg <= lo_arg {
                pieces.push(Polynomial::zero());
                continue;
            }
            let upper = if &mid < cap {
                big.cumulative_piece(u, v)
            } else {
                Polynomial::constant(big.cumulative(cap))
            };
            let lower = if &mid - l > x0 {
                big.cumulative_piece(&(u - l), &(v - l)).shift(&-l)
            } else {
                Polynomial::constant(big.cumulative(&x0))
            };
            pieces.push(&upper - &lower);
        }
        Ok(Self::build(pts, pieces).simplified())
    }

    /// `f ∗ 1_[0,L]`: `x ↦ ∫_{x−L}^x f`.
    pub fn convolve_with_indicator(&self, l: &Rational) -> Result<Self> {
        let end = self.breaks[self.breaks.len() - 1].clone();
        self.convolve_capped(l, &end)
    }

    /// Merges equal neighbouring pieces and drops zero pieces past `1`.
    fn simplified(self) -> Self {
        let mut breaks = vec![self.breaks[0].clone()];
        let mut pieces: Vec<Polynomial> = Vec::new();
        for (i, p) in self.pieces.into_iter().enumerate() {
            if pieces.last() == Some(&p) {
                *breaks.last_mut().expect("nonempty") = self.breaks[i + 1].clone();
            } else {
                pieces.push(p);
                breaks.push(self.breaks[i + 1].clone());
            }
        }
        let one = Rational::one();
        while pieces.len() > 1 && pieces.last().is_some_and(Polynomial::is_zero) && breaks[breaks.len() - 2] >= one {
            pieces.pop();
            breaks.pop();
        }
        if pieces.last().is_some_and(Polynomial::is_zero) && breaks[breaks.len() - 1] > one {
            *breaks.last_mut().expect("nonempty") = one;
        }
        Self::build(breaks, pieces)
    }

    /// Smallest breakpoint beyond which `f` vanishes.
    pub fn support_end(&self) -> Rational {
        let mut m = self.pieces.len();
        while m > 0 && self.pieces[m - 1].is_zero() {
            m -= 1;
        }
        self.breaks[m].clone()
    }
}

/// `[f_1, …, f_k]` with `f_1 = 1_[0,1)` and
/// `f_{j+1}(x) = F_j(min(x, j/(k+1))) − F_j(max(0, x − 1/(k+1)))`.
/// For `j >= 2`, `f_j` is the `j`-th convolution power of `1_(0, 1/(k+1))`.
pub fn f_family(k: usize) -> Result<Vec<PiecewisePolynomial>> {
    if k == 0 {
        return Err(Error::param("k", "must be at least 1"));
    }
    let l = Rational::new(1.into(), ((k + 1) as i64).into());
    let mut out = vec![PiecewisePolynomial::constant(Rational::one())];
    for j in 1..k {
        let cap = &l * Rational::from_integer((j as i64).into());
        let next = out[j - 1].convolve_capped(&l, &cap)?;
        out.push(next);
    }
    Ok(out)
}
