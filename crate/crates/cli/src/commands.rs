use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use sumset_core::constructions::{
    cantor_approx, cantor_pair_witness, kneser_feasibility, pair_witness, rational_witness,
    region_closure_contains, region_scan, triplet_witness, KneserReason, WitnessRecipe,
};
use sumset_core::integer::{discrepancy_check_windowed, sumset, FixedPointReal};
use sumset_core::piecewise::FkEngine;
use sumset_core::random::{
    density_report, j_asymptote, j_sum, s_k_sample, SamplerConfig, TOLERANCES,
};
use sumset_core::rational::{parse_rational, to_f64};
use sumset_core::torus::{normalize, parse_set_file, sumset_profile, TorusInterval, TorusSet};
use sumset_core::{Error, Rational};

use crate::emit::Table;
use crate::{Cli, Cmd, FkCmd, RegionCmd, WitnessCmd};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Infeasible,
}

pub struct Reply {
    pub status: Status,
    pub json: Value,
    pub table: Option<Table>,
    pub diagnostics: Vec<String>,
}

impl Reply {
    fn ok(json: Value) -> Self {
        Self {
            status: Status::Ok,
            json,
            table: None,
            diagnostics: Vec::new(),
        }
    }

    fn infeasible(json: Value, why: impl Into<String>) -> Self {
        Self {
            status: Status::Infeasible,
            json,
            table: None,
            diagnostics: vec![why.into()],
        }
    }

    fn with_table(mut self, header: Vec<&'static str>, rows: Vec<Vec<Value>>) -> Self {
        self.table = Some(Table { header, rows });
        self
    }
}

fn s(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn strs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn split2(text: &str, what: &str) -> Result<(String, String)> {
    match text.split_once(':') {
        Some((a, b)) => Ok((a.trim().to_string(), b.trim().to_string())),
        None => bail!("{what} must look like `lo:hi`, got `{text}`"),
    }
}

fn usize_range(text: &str, what: &str) -> Result<(usize, usize)> {
    let (a, b) = split2(text, what)?;
    Ok((
        a.parse().with_context(|| format!("{what}: bad lower end `{a}`"))?,
        b.parse().with_context(|| format!("{what}: bad upper end `{b}`"))?,
    ))
}

/// A set file, or any JSON payload of this tool with a `set` field.
fn read_set(path: &Path) -> Result<TorusSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let nested = serde_json::from_str::<Value>(&text)
        .ok()
        .and_then(|v| v.get("set").filter(|s| s.get("intervals").is_some()).map(Value::to_string));
    parse_set_file(nested.as_deref().unwrap_or(&text)).with_context(|| format!("parsing {}", path.display()))
}

pub fn run(cli: &Cli) -> Result<Reply> {
    match &cli.cmd {
        Cmd::Witness { which } => match which {
            WitnessCmd::Pair { alpha, beta } => witness_pair(alpha, beta),
            WitnessCmd::Triplet { alpha, beta, gamma } => witness_triplet(alpha, beta, gamma),
            WitnessCmd::Rational {
                alpha,
                beta,
                horizon,
                set_out,
                bitmap,
            } => witness_rational(alpha, beta, *horizon, cli.seed, set_out.as_deref(), *bitmap),
        },
        Cmd::Feasible { alpha, beta } => feasible(alpha, beta),
        Cmd::Measure { set } => {
            let a = read_set(set)?;
            Ok(Reply::ok(json!({
                "measure": s(&a.measure()),
                "components": a.component_count(),
                "set": a,
            })))
        }
        Cmd::Profile { set, k } => {
            let a = read_set(set)?;
            let p = sumset_profile(&a, *k)?;
            let rows = p
                .iter()
                .enumerate()
                .map(|(j, m)| vec![json!(j + 1), s(m)])
                .collect();
            Ok(Reply::ok(json!({"set": a, "profile": strs(&p)})).with_table(vec!["j", "measure"], rows))
        }
        Cmd::Region {
            which: RegionCmd::Scan { denominator },
        } => {
            let rows = region_scan(*denominator)?;
            let table = rows
                .iter()
                .map(|r| {
                    let mut row = vec![s(&r.x), s(&r.y), s(&r.z)];
                    row.extend(r.profile.iter().map(s));
                    row.push(json!(r.in_region));
                    row
                })
                .collect();
            Ok(Reply::ok(serde_json::to_value(&rows)?)
                .with_table(vec!["x", "y", "z", "mu1", "mu2", "mu3", "in_region"], table))
        }
        Cmd::Fk(args) => match &args.table {
            Some(FkCmd::Table { k, grid, tol }) => fk_table(*k, grid, *tol),
            None => {
                let (k, c) = (args.k.expect("required"), args.c.expect("required"));
                let engine = FkEngine::new(k)?;
                let f = engine.big_f(c, args.tol)?;
                Ok(Reply::ok(json!({
                    "k": k,
                    "c": c,
                    "tol": args.tol,
                    "lambda_k": engine.lambda(),
                    "F_k": f,
                    "predicted_density": engine.ceiling() - f,
                })))
            }
        },
        Cmd::Simulate {
            k,
            c,
            theta,
            horizon,
            trials,
            window,
        } => simulate(*k, *c, theta, *horizon, cli.seed, *trials, window.as_deref()),
        Cmd::Sk {
            k,
            theta,
            n_range,
            samples,
        } => {
            let range = usize_range(n_range, "--n-range")?;
            let sample = s_k_sample(*k, theta, range, *samples, cli.seed)?;
            let rows = sample
                .rows
                .iter()
                .map(|r| vec![json!(r.n), json!(r.frac), json!(r.f_k), json!(r.s_k), json!(r.predicted), json!(r.rel_error)])
                .collect();
            Ok(Reply::ok(serde_json::to_value(&sample)?)
                .with_table(vec!["n", "frac", "f_k", "s_k", "predicted", "rel_error"], rows))
        }
        Cmd::Jsum { alpha, beta, n } => {
            let j = j_sum(*alpha, *beta, *n)?;
            let a = j_asymptote(*alpha, *beta, *n)?;
            let regime = if *beta < 1.0 {
                "beta"
            } else if *beta == 1.0 {
                "log"
            } else {
                "zeta"
            };
            Ok(Reply::ok(json!({
                "alpha": alpha,
                "beta": beta,
                "n": n,
                "j_sum": j,
                "asymptote": a,
                "ratio": j / a,
                "regime": regime,
            })))
        }
        Cmd::Discrepancy {
            theta,
            interval,
            n,
            m,
            offset,
        } => {
            let (lo, hi) = split2(interval, "--interval")?;
            let iv = TorusInterval::new(parse_rational(&lo)?, parse_rational(&hi)?)?;
            let p = discrepancy_check_windowed(theta, &iv, *n, *m, *offset)?;
            let mut v = serde_json::to_value(&p)?;
            v["holds"] = json!(p.holds());
            Ok(Reply::ok(v))
        }
        Cmd::Cantor {
            ratio_denom,
            depth,
            beta,
        } => cantor(*ratio_denom, *depth, beta.as_ref()),
    }
}

fn witness_pair(alpha: &Rational, beta: &Rational) -> Result<Reply> {
    let floor = std::cmp::min(alpha * Rational::from_integer(2.into()), Rational::one());
    if alpha > &Rational::zero() && beta < &floor && beta > &Rational::zero() {
        return Ok(Reply::infeasible(
            json!({
                "status": "infeasible",
                "alpha": s(alpha),
                "beta": s(beta),
                "reason": "measure(2A) is at least min(2 measure(A), 1) on the circle",
            }),
            "no circle set has this pair; try `feasible` for sets of integers",
        ));
    }
    let (recipe, set) = pair_witness(alpha, beta)?;
    let profile = sumset_profile(&set, 2)?;
    let verified = profile == [alpha.clone(), beta.clone()];
    Ok(Reply::ok(json!({
        "recipe": recipe,
        "set": set,
        "profile": strs(&profile),
        "verified": verified,
    })))
}

fn witness_triplet(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<Reply> {
    let refuse = |reason: &str| {
        Reply::infeasible(
            json!({
                "status": "infeasible",
                "alpha": s(alpha),
                "beta": s(beta),
                "gamma": s(gamma),
                "reason": reason,
            }),
            format!("no two-interval witness: {reason}"),
        )
    };
    if !region_closure_contains(alpha, beta, gamma) {
        return Ok(refuse("OutsideRegion"));
    }
    match triplet_witness(alpha, beta, gamma) {
        Ok((branch, set)) => {
            let profile = sumset_profile(&set, 3)?;
            let verified = profile == [alpha.clone(), beta.clone(), gamma.clone()];
            Ok(Reply::ok(json!({
                "recipe": WitnessRecipe::IntervalUnion { set: set.clone() },
                "branch": branch,
                "set": set,
                "profile": strs(&profile),
                "verified": verified,
            })))
        }
        Err(Error::NoTwoIntervalWitness { .. }) => Ok(refuse("NoTwoIntervalWitness")),
        Err(e) => Err(e.into()),
    }
}

fn witness_rational(
    alpha: &Rational,
    beta: &Rational,
    horizon: usize,
    seed: u64,
    set_out: Option<&Path>,
    bitmap: bool,
) -> Result<Reply> {
    let (recipe, set) = match rational_witness(alpha, beta, horizon, seed) {
        Ok(x) => x,
        Err(Error::Infeasible(cert)) => {
            return Ok(Reply::infeasible(
                json!({"status": "infeasible", "alpha": s(alpha), "beta": s(beta), "certificate": cert}),
                format!("({alpha}, {beta}) is not a density pair: {:?}", cert.reason),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let twice = sumset(&set, &set)?;
    let (lo, hi) = (horizon / 2, horizon);
    let d1 = set.window_density(lo, hi)?;
    let d2 = twice.window_density(lo, hi)?;
    let tol = TOLERANCES.pair_density;
    let within = (d1 - to_f64(alpha)).abs() <= tol && (d2 - to_f64(beta)).abs() <= tol;
    if let Some(path) = set_out {
        let text = if bitmap { set.to_bitmap_text() } else { set.to_member_text() };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut reply = Reply::ok(json!({
        "recipe": recipe,
        "certificate": kneser_feasibility(alpha, beta)?,
        "horizon": horizon,
        "window": [lo, hi],
        "size": set.len(),
        "density": {"A": d1, "2A": d2},
        "target": {"A": s(alpha), "2A": s(beta)},
        "tolerance": tol,
        "within_tolerance": within,
    }));
    if !within {
        reply
            .diagnostics
            .push(format!("windowed densities ({d1:.4}, {d2:.4}) miss the target by more than {tol}"));
    }
    Ok(reply)
}

fn feasible(alpha: &Rational, beta: &Rational) -> Result<Reply> {
    let cert = kneser_feasibility(alpha, beta)?;
    let body = json!({
        "alpha": s(alpha),
        "beta": s(beta),
        "feasible": cert.feasible,
        "reason": cert.reason,
        "g0": cert.g0,
        "r": cert.r,
    });
    Ok(match cert.reason {
        KneserReason::Feasible | KneserReason::NotApplicable => Reply::ok(body),
        reason => Reply::infeasible(body, format!("({alpha}, {beta}): {reason:?}")),
    })
}

fn fk_table(k: usize, grid: &str, tol: f64) -> Result<Reply> {
    let parts: Vec<&str> = grid.split(':').collect();
    let [c0, c1, n] = parts.as_slice() else {
        bail!("--grid must look like `c0:c1:n`, got `{grid}`");
    };
    let c0: f64 = c0.parse().context("--grid: bad c0")?;
    let c1: f64 = c1.parse().context("--grid: bad c1")?;
    let n: usize = n.parse().context("--grid: bad n")?;
    if n == 0 {
        bail!("--grid needs at least one point");
    }
    let engine = FkEngine::new(k)?;
    let mut rows = Vec::with_capacity(n);
    let mut items = Vec::with_capacity(n);
    for i in 0..n {
        let c = if n == 1 { c0 } else { c0 + (c1 - c0) * i as f64 / (n - 1) as f64 };
        let f = engine.big_f(c, tol)?;
        let d = engine.ceiling() - f;
        rows.push(vec![json!(c), json!(f), json!(d)]);
        items.push(json!({"c": c, "F_k": f, "predicted_density": d}));
    }
    Ok(Reply::ok(json!({"k": k, "lambda_k": engine.lambda(), "rows": items}))
        .with_table(vec!["c", "F_k", "predicted_density"], rows))
}

fn simulate(
    k: usize,
    c: f64,
    theta: &FixedPointReal,
    horizon: usize,
    seed: u64,
    trials: u64,
    window: Option<&str>,
) -> Result<Reply> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let window = window.map(|w| usize_range(w, "--window")).transpose()?;
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for t in 0..trials {
        let cfg = SamplerConfig::new(k, c, theta.clone(), horizon, seed + t)?;
        let r = density_report(&cfg, window)?;
        for row in &r.rows {
            rows.push(vec![
                json!(cfg.seed),
                json!(row.j),
                json!(row.count),
                json!(row.density),
                json!(row.predicted),
                json!(row.deviation),
            ]);
        }
        reports.push(r);
    }
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        serde_json::to_value(&reports)?
    };
    Ok(Reply::ok(json).with_table(vec!["seed", "j", "count", "density", "predicted", "deviation"], rows))
}

fn cantor(ratio_denom: u32, depth: u32, beta: Option<&Rational>) -> Result<Reply> {
    if let Some(beta) = beta {
        if ratio_denom != 3 {
            bail!("--beta builds (β/2)·C₃ and needs --ratio-denom 3");
        }
        let set = cantor_pair_witness(beta, depth)?;
        let profile = sumset_profile(&set, 2)?;
        return Ok(Reply::ok(json!({
            "beta": s(beta),
            "depth": depth,
            "set": set,
            "profile": strs(&profile),
            "verified": &profile[1] == beta,
        })));
    }
    let raw = cantor_approx(ratio_denom, depth)?;
    let intervals: Vec<Value> = raw.intervals().iter().map(|(a, b)| json!([s(a), s(b)])).collect();
    let measure = normalize(&raw).measure();
    Ok(Reply::ok(json!({
        "ratio_denom": ratio_denom,
        "depth": depth,
        "intervals": intervals,
        "measure": s(&measure),
    })))
}
