//! wasm-bindgen entry points for the static page in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string; the
//! page draws the intervals it gets back on a canvas. The same functions
//! without the `wasm_bindgen` wrapper are used by the native tests.

use serde_json::{json, Value};
use sumset_core::constructions::{pair_witness, triplet_witness, WitnessRecipe};
use sumset_core::piecewise::FkEngine;
use sumset_core::rational::{parse_rational, to_f64};
use sumset_core::torus::{iterated_sumset, TorusSet};
use sumset_core::{Error, Rational};
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 2000;

fn rational(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("{name}: {e}"))
}

fn floats(set: &TorusSet) -> Value {
    set.intervals()
        .iter()
        .map(|iv| json!([to_f64(iv.lo()), to_f64(iv.hi())]))
        .collect()
}

/// `A, 2A, …, kA` as exact strings plus float intervals for drawing.
fn layers(set: &TorusSet, k: usize) -> Result<Vec<Value>, String> {
    (1..=k)
        .map(|j| {
            let s = iterated_sumset(set, j).map_err(|e| e.to_string())?;
            Ok(json!({
                "j": j,
                "measure": s.measure().to_string(),
                "intervals": floats(&s),
            }))
        })
        .collect()
}

pub fn pair_json(alpha: &str, beta: &str) -> Result<String, String> {
    let (a, b) = (rational("alpha", alpha)?, rational("beta", beta)?);
    let (recipe, set) = pair_witness(&a, &b).map_err(|e| e.to_string())?;
    let out = json!({
        "recipe": recipe,
        "set": set,
        "layers": layers(&set, 2)?,
    });
    Ok(out.to_string())
}

pub fn triplet_json(alpha: &str, beta: &str, gamma: &str) -> Result<String, String> {
    let (a, b, g) = (rational("alpha", alpha)?, rational("beta", beta)?, rational("gamma", gamma)?);
    let (branch, set) = match triplet_witness(&a, &b, &g) {
        Ok(x) => x,
        Err(Error::NoTwoIntervalWitness { .. }) => {
            return Err(format!("no set [0,x] ∪ [y,z] has profile ({a}, {b}, {g})"));
        }
        Err(e) => return Err(e.to_string()),
    };
    let out = json!({
        "recipe": WitnessRecipe::IntervalUnion { set: set.clone() },
        "branch": branch,
        "set": set,
        "layers": layers(&set, 3)?,
    });
    Ok(out.to_string())
}

/// `F_k` on `points` values of `c` in `[0, c_max]`, and `f_k` itself.
pub fn fk_json(k: usize, c_max: f64, points: usize) -> Result<String, String> {
    if !(c_max > 0.0 && c_max.is_finite()) {
        return Err("c_max must be positive".into());
    }
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(format!("points must lie in 2..={MAX_POINTS}"));
    }
    let engine = FkEngine::new(k).map_err(|e| e.to_string())?;
    let curve: Result<Vec<Value>, String> = (0..points)
        .map(|i| {
            let c = c_max * i as f64 / (points - 1) as f64;
            let f = engine.big_f(c, 1e-9).map_err(|e| e.to_string())?;
            Ok(json!({"c": c, "F": f, "density": engine.ceiling() - f}))
        })
        .collect();
    let shape: Vec<Value> = (0..=200)
        .map(|i| {
            let t = i as f64 / 200.0;
            json!([t, engine.f_k().eval_f64(t)])
        })
        .collect();
    let out = json!({
        "k": k,
        "lambda": engine.lambda(),
        "ceiling": engine.ceiling(),
        "curve": curve?,
        "f_k": shape,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn pair(alpha: &str, beta: &str) -> Result<String, JsValue> {
    pair_json(alpha, beta).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn triplet(alpha: &str, beta: &str, gamma: &str) -> Result<String, JsValue> {
    triplet_json(alpha, beta, gamma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fk_curve(k: usize, c_max: f64, points: usize) -> Result<String, JsValue> {
    fk_json(k, c_max, points).map_err(|e| JsValue::from_str(&e))
}
