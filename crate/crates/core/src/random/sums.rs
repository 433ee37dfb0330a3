//! Direct evaluation of the weighted representation sum `S_k(n)` and of
//! `J_N(α, β) = Σ_{0<x<N} x^{−α}(N−x)^{−β}` with its asymptotes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::TOLERANCES;
use crate::error::{Error, Result};
use crate::integer::{beatty_t, FixedPointReal};
use crate::piecewise::{beta_ref, zeta_ref, FkEngine};

/// `Σ (u₁⋯u_k)^{−1+1/k}` over `0 < u₁ < ⋯ < u_k`, `uᵢ ∈ T_{k,θ}`,
/// `u₁ + ⋯ + u_k = n`, for `k ∈ {2, 3}`.
pub fn s_k_bruteforce(k: usize, theta: &FixedPointReal, n: usize) -> Result<f64> {
    let cap = match k {
        2 => 1_000_000,
        3 => 20_000,
        _ => return Err(Error::param("k", "only k = 2 and k = 3 are supported")),
    };
    if n > cap {
        return Err(Error::param("n", format!("must be at most {cap} for k = {k}")));
    }
    if n < k {
        return Ok(0.0);
    }
    let t = beatty_t(k, theta, n)?;
    let e = -1.0 + 1.0 / k as f64;
    let w = |u: usize| (u as f64).powf(e);
    let members: Vec<usize> = t.members().collect();
    let mut sum = 0.0;
    if k == 2 {
        for &u1 in members.iter().take_while(|&&u| 2 * u < n) {
            if t.contains(n - u1) {
                sum += w(u1) * w(n - u1);
            }
        }
    } else {
        for (i, &u1) in members.iter().enumerate() {
            if 3 * u1 >= n {
                break;
            }
            let w1 = w(u1);
            for &u2 in members[i + 1..].iter().take_while(|&&u| u1 + 2 * u < n) {
                if t.contains(n - u1 - u2) {
                    sum += w1 * w(u2) * w(n - u1 - u2);
                }
            }
        }
    }
    Ok(sum)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkRow {
    pub n: usize,
    pub frac: f64,
    pub f_k: f64,
    pub s_k: f64,
    /// `λ_k f_k(frac(θn))`.
    pub predicted: f64,
    pub rel_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkSample {
    pub k: usize,
    pub theta: String,
    pub range: [usize; 2],
    pub seed: u64,
    pub rows: Vec<SkRow>,
    pub median_rel_error: f64,
}

/// `S_k(n)` against `λ_k f_k(frac(θn))` at `samples` seeded draws of `n` from
/// `[lo, hi]`, keeping only `n` with `f_k(frac(θn)) >= TOLERANCES.s_k_min_f`.
pub fn s_k_sample(
    k: usize,
    theta: &FixedPointReal,
    (lo, hi): (usize, usize),
    samples: usize,
    seed: u64,
) -> Result<SkSample> {
    if lo > hi || samples == 0 {
        return Err(Error::param("n-range, samples", "need lo <= hi and samples >= 1"));
    }
    let engine = FkEngine::new(k)?;
    let f_at = |n: usize| engine.f_k().eval_f64(theta.frac_f64(n as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ns = Vec::with_capacity(samples);
    let mut draws = 0usize;
    while ns.len() < samples {
        draws += 1;
        if draws > 1000 * samples {
            return Err(Error::param("theta", "too few n in range where f_k is not small"));
        }
        let n = rng.random_range(lo..=hi);
        if f_at(n) >= TOLERANCES.s_k_min_f {
            ns.push(n);
        }
    }
    let row = |n: usize| -> Result<SkRow> {
        let s_k = s_k_bruteforce(k, theta, n)?;
        let f = f_at(n);
        let predicted = engine.lambda() * f;
        Ok(SkRow {
            n,
            frac: theta.frac_f64(n as u64),
            f_k: f,
            s_k,
            predicted,
            rel_error: (s_k / predicted - 1.0).abs(),
        })
    };
    #[cfg(feature = "parallel")]
    let rows: Result<Vec<SkRow>> = {
        use rayon::prelude::*;
        ns.par_iter().map(|&n| row(n)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Result<Vec<SkRow>> = ns.iter().map(|&n| row(n)).collect();
    let rows = rows?;
    let mut errs: Vec<f64> = rows.iter().map(|r| r.rel_error).collect();
    errs.sort_by(f64::total_cmp);
    let m = errs.len();
    let median_rel_error = if m % 2 == 1 {
        errs[m / 2]
    } else {
        0.5 * (errs[m / 2 - 1] + errs[m / 2])
    };
    Ok(SkSample {
        k,
        theta: theta.to_string(),
        range: [lo, hi],
        seed,
        rows,
        median_rel_error,
    })
}

fn check_j(alpha: f64, beta: f64, n: usize) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::param("alpha", "must lie in (0, 1)"));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::param("beta", "must be positive"));
    }
    if n < 2 {
        return Err(Error::param("n", "must be at least 2"));
    }
    Ok(())
}

/// Direct sum, compensated.
pub fn j_sum(alpha: f64, beta: f64, n: usize) -> Result<f64> {
    check_j(alpha, beta, n)?;
    let nf = n as f64;
    let (mut s, mut comp) = (0.0f64, 0.0f64);
    // Smallest terms first.
    for x in (1..n).rev() {
        let xf = x as f64;
        let term = xf.powf(-alpha) * (nf - xf).powf(-beta);
        let y = term - comp;
        let t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    Ok(s)
}

/// `B(1−α, 1−β)N^{1−α−β}`, `N^{−α} log N` or `ζ(β)N^{−α}` for `β` below,
/// at or above 1.
pub fn j_asymptote(alpha: f64, beta: f64, n: usize) -> Result<f64> {
    check_j(alpha, beta, n)?;
    let nf = n as f64;
    Ok(if beta < 1.0 {
        beta_ref(1.0 - alpha, 1.0 - beta)?.value * nf.powf(1.0 - alpha - beta)
    } else if beta == 1.0 {
        nf.powf(-alpha) * nf.ln()
    } else {
        zeta_ref(beta)?.value * nf.powf(-alpha)
    })
}
