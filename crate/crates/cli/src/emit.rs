//! JSON and CSV writers. Floats keep 12 significant digits; rationals are
//! already strings by the time they get here.

use std::fs::File;
use std::io::{self, Write};

use anyhow::{bail, Context, Result};
use serde_json::Value;

use crate::commands::Reply;
use crate::Format;

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Rounds every non-integer number in place.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round12(x))) {
                *n = x;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => round12(x).to_string(),
            _ => n.to_string(),
        },
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(reply: &Reply, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut v = reply.json.clone();
            round_floats(&mut v);
            let mut out = serde_json::to_vec_pretty(&v)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let Some(table) = &reply.table else {
                bail!("this command has no tabular output; use --format json");
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row.iter().map(cell))?;
            }
            Ok(w.into_inner().context("flushing csv")?)
        }
    }
}

pub fn write(reply: &Reply, format: Format, out: Option<&str>) -> Result<()> {
    let bytes = render(reply, format)?;
    match out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(&bytes))
            .with_context(|| format!("writing {path}")),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
