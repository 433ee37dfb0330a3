//! Windowed densities of `jA`, `j = 1..=k+1`, for a restricted pseudo
//! `k`-th power sample, next to their predicted limits.

use std::time::Instant;

use serde::Serialize;

use super::{sample_restricted, SamplerConfig};
use crate::error::{Error, Result};
use crate::integer::{sumset, FiniteIntegerSet};
use crate::piecewise::{lambda_k, FkEngine};

pub const REPORT_SCHEMA: &str = "sumset.simulation/v1";
const MAX_K: usize = 4;
const MIN_HORIZON: usize = 100_000;
const QUAD_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub k: usize,
    pub c: f64,
    pub theta: String,
    pub horizon: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub j: usize,
    pub count: usize,
    pub density: f64,
    pub predicted: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub schema: &'static str,
    pub config: ConfigEcho,
    pub window: [usize; 2],
    pub sample_size: usize,
    pub rows: Vec<DensityRow>,
    /// `k/(k+1) − F_k(c)`, or `1 − exp(−c^k λ_k)` for integer `θ`.
    pub predicted_k_fold: f64,
    /// The same limit read as `β·k/(k+1)` with `β` the density of `kA`
    /// inside `kT_{k,θ}`.
    pub beta_inside_kt: f64,
    pub f_k: Option<f64>,
    /// Counts of `jA` on the window shifted by `j·min(A)` never decrease.
    pub monotone: bool,
    pub runtime_ms: u128,
}

impl SimulationReport {
    pub fn density(&self, j: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.j == j).map(|r| r.density)
    }
}

/// Samples `A`, forms `jA` by exact sumsets and compares densities on
/// `window` (default `[N/2, N)`).
pub fn density_report(cfg: &SamplerConfig, window: Option<(usize, usize)>) -> Result<SimulationReport> {
    if cfg.k > MAX_K {
        return Err(Error::param("k", format!("at most {MAX_K} is supported")));
    }
    if cfg.horizon < MIN_HORIZON {
        return Err(Error::param("horizon", format!("must be at least {MIN_HORIZON}")));
    }
    let n = cfg.horizon;
    let (lo, hi) = window.unwrap_or((n / 2, n));
    if lo >= hi || hi > n {
        return Err(Error::param("window", format!("need lo < hi <= {n}")));
    }
    let start = Instant::now();
    let k = cfg.k;
    let kf = k as f64;
    let (predicted_k_fold, beta_inside_kt, f_k) = if cfg.theta.is_integer() {
        let p = 1.0 - (-cfg.c.powi(k as i32) * lambda_k(k)?.value).exp();
        (p, p, None)
    } else {
        let f = FkEngine::new(k)?.big_f(cfg.c, QUAD_TOL)?;
        (kf / (kf + 1.0) - f, 1.0 - (kf + 1.0) / kf * f, Some(f))
    };

    let a = sample_restricted(cfg);
    let mut sums: Vec<FiniteIntegerSet> = vec![a.clone()];
    for _ in 1..=k {
        let next = sumset(sums.last().expect("nonempty"), &a)?;
        sums.push(next);
    }
    let width = (hi - lo) as f64;
    let rows = sums
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let j = i + 1;
            let count = s.window_count(lo, hi);
            let density = count as f64 / width;
            let predicted = if j < k {
                0.0
            } else if j == k {
                predicted_k_fold
            } else {
                1.0
            };
            DensityRow {
                j,
                count,
                density,
                predicted,
                deviation: density - predicted,
            }
        })
        .collect();
    let monotone = shifted_counts_monotone(&sums, &a, lo, hi);
    Ok(SimulationReport {
        schema: REPORT_SCHEMA,
        config: ConfigEcho {
            k,
            c: cfg.c,
            theta: cfg.theta.to_string(),
            horizon: n,
            seed: cfg.seed,
        },
        window: [lo, hi],
        sample_size: a.len(),
        rows,
        predicted_k_fold,
        beta_inside_kt,
        f_k,
        monotone,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// `jA + min(A) ⊆ (j+1)A`, so `|jA ∩ (W + j·m)|` is nondecreasing in `j`
/// for a window `W` short enough that every shift stays inside `[0, N)`.
fn shifted_counts_monotone(sums: &[FiniteIntegerSet], a: &FiniteIntegerSet, lo: usize, hi: usize) -> bool {
    let Some(m) = a.members().next() else {
        return true;
    };
    let n = a.horizon();
    let top = sums.len() * m;
    if hi + top > n {
        let hi = n.saturating_sub(top);
        if hi <= lo {
            return true;
        }
        return shifted_counts_monotone(sums, a, lo, hi);
    }
    let counts: Vec<usize> = sums
        .iter()
        .enumerate()
        .map(|(i, s)| s.window_count(lo + (i + 1) * m, hi + (i + 1) * m))
        .collect();
    counts.windows(2).all(|w| w[0] <= w[1])
}
