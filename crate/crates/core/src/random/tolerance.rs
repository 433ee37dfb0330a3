//! Bands for the finite-`N` statistical checks, kept in one place.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Upper bound on `d̂(jA)` for `j < k`.
    pub sparse_density: f64,
    /// `|d̂(kA) − prediction|`.
    pub k_fold_density: f64,
    /// Lower bound on `d̂((k+1)A)`.
    pub full_density: f64,
    /// `|d̂ − β·d(T)|` for the pair construction.
    pub pair_density: f64,
    /// Median relative error of `S_k(n)` against its asymptote.
    pub s_k_median: f64,
    /// Only `n` with `f_k(frac(θn))` at least this enter the median.
    pub s_k_min_f: f64,
    /// `|J_N − B(1−α, 1−β)|` in the `β < 1` regime.
    pub j_beta_abs: f64,
    /// `|J_N/(ζ(β)N^{−α}) − 1|` in the `β > 1` regime.
    pub j_zeta_rel: f64,
    /// Band for `J_N/(N^{−α} log N)` when `β = 1`.
    pub j_log_band: (f64, f64),
    /// `|d̂(B_A + B_B) − μ(A + B)|`.
    pub open_sum: f64,
    pub seeds: usize,
    pub seeds_required: usize,
}

pub const TOLERANCES: Tolerances = Tolerances {
    sparse_density: 0.01,
    k_fold_density: 0.02,
    full_density: 0.99,
    pair_density: 0.01,
    s_k_median: 0.25,
    s_k_min_f: 0.1,
    j_beta_abs: 0.01,
    j_zeta_rel: 0.02,
    j_log_band: (0.9, 1.1),
    open_sum: 0.01,
    seeds: 5,
    seeds_required: 4,
};
