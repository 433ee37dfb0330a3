//! `F_k(c) = ∫_0^{k/(k+1)} exp(−c^k λ_k f_k(t)) dt` and its inverse in `c`.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

use super::{f_family, lambda_k, PiecewisePolynomial};
use crate::error::{Error, Result};
use crate::rational::to_f64;

const NODES: usize = 32;
const MAX_DEPTH: u32 = 40;

/// Precomputed `f_k`, `λ_k` and quadrature nodes for one `k`.
#[derive(Clone, Debug)]
pub struct FkEngine {
    k: usize,
    f_k: PiecewisePolynomial,
    lambda: f64,
    pieces: Vec<(f64, f64)>,
    rule: GaussLegendre,
}

impl FkEngine {
    pub fn new(k: usize) -> Result<Self> {
        let fam = f_family(k)?;
        let f_k = fam.into_iter().last().expect("k >= 1");
        let end = (k as f64) / (k as f64 + 1.0);
        let pieces = f_k
            .breaks()
            .windows(2)
            .map(|w| (to_f64(&w[0]), to_f64(&w[1]).min(end)))
            .filter(|(a, b)| a < b)
            .collect();
        Ok(Self {
            k,
            f_k,
            lambda: lambda_k(k)?.value,
            pieces,
            rule: GaussLegendre::new(NonZeroUsize::new(NODES).expect("nonzero")),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn f_k(&self) -> &PiecewisePolynomial {
        &self.f_k
    }

    /// `k/(k+1)`, the value of `F_k(0)`.
    pub fn ceiling(&self) -> f64 {
        self.k as f64 / (self.k as f64 + 1.0)
    }

    pub fn big_f(&self, c: f64, tol: f64) -> Result<f64> {
        if !(tol > 0.0) {
            return Err(Error::param("tol", "must be positive"));
        }
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::param("c", format!("must be finite and >= 0, got {c}")));
        }
        let scale = c.powi(self.k as i32) * self.lambda;
        let g = |t: f64| (-scale * self.f_k.eval_f64(t)).exp();
        let per_piece = tol / self.pieces.len() as f64;
        Ok(self
            .pieces
            .iter()
            .map(|&(a, b)| {
                let whole = self.rule.integrate(a, b, g);
                self.refine(&g, a, b, whole, per_piece, MAX_DEPTH)
            })
            .sum())
    }

    fn refine(&self, g: &impl Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let left = self.rule.integrate(a, m, g);
        let right = self.rule.integrate(m, b, g);
        if (left + right - whole).abs() <= tol || depth == 0 {
            return left + right;
        }
        self.refine(g, a, m, left, tol / 2.0, depth - 1) + self.refine(g, m, b, right, tol / 2.0, depth - 1)
    }

    /// `k/(k+1) − F_k(c)`.
    pub fn predicted_density(&self, c: f64, tol: f64) -> Result<f64> {
        Ok(self.ceiling() - self.big_f(c, tol)?)
    }

    /// `c >= 0` with `|F_k(c) − target| <= tol`, by bisection.
    pub fn solve_c(&self, target: f64, tol: f64) -> Result<f64> {
        if !(target > 0.0 && target < self.ceiling()) {
            return Err(Error::param(
                "target",
                format!("must lie in (0, {}), got {target}", self.ceiling()),
            ));
        }
        if !(tol > 0.0) {
            return Err(Error::param("tol", "must be positive"));
        }
        let quad_tol = tol / 10.0;
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        let mut f_hi = self.big_f(hi, quad_tol)?;
        while f_hi > target {
            lo = hi;
            hi *= 2.0;
            if hi > 1e12 {
                return Err(Error::param("target", "too small to bracket"));
            }
            f_hi = self.big_f(hi, quad_tol)?;
        }
        if (f_hi - target).abs() <= tol {
            return Ok(hi);
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let f = self.big_f(mid, quad_tol)?;
            if (f - target).abs() <= tol || hi - lo <= f64::EPSILON * hi {
                return Ok(mid);
            }
            if f > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

pub fn big_f(k: usize, c: f64, tol: f64) -> Result<f64> {
    FkEngine::new(k)?.big_f(c, tol)
}

pub fn solve_c(k: usize, target: f64, tol: f64) -> Result<f64> {
    FkEngine::new(k)?.solve_c(target, tol)
}
