//! Text formats for truncated integer sets.
//!
//! Member list:
//! ```text
//! horizon 13
//! 1
//! 3
//! ```
//! Bitmap: `bitmap N` followed by hex bytes (whitespace ignored); byte `j`
//! holds members `8j..8j+7`, least significant bit first.

use super::FiniteIntegerSet;
use crate::error::{Error, Result};

impl FiniteIntegerSet {
    pub fn to_member_text(&self) -> String {
        let mut out = format!("horizon {}\n", self.horizon);
        for m in self.members() {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_bitmap_text(&self) -> String {
        let bytes: Vec<u8> = self
            .words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(self.horizon.div_ceil(8))
            .collect();
        let hex = hex::encode(bytes);
        let mut out = format!("bitmap {}\n", self.horizon);
        for chunk in hex.as_bytes().chunks(64) {
            out.push_str(std::str::from_utf8(chunk).expect("hex is ascii"));
            out.push('\n');
        }
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_integer_set(text: &str) -> Result<FiniteIntegerSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let horizon: usize = parts
        .next()
        .and_then(|n| n.parse().ok())
        .filter(|_| parts.next().is_none())
        .ok_or_else(|| parse_err(hline, format!("bad header `{header}`")))?;
    match kind {
        "horizon" => {
            let mut set = FiniteIntegerSet::empty(horizon);
            for (i, l) in lines {
                let m: usize = l
                    .parse()
                    .map_err(|_| parse_err(i, format!("not a nonnegative integer: `{l}`")))?;
                if m >= horizon {
                    return Err(parse_err(i, format!("{m} is outside [0, {horizon})")));
                }
                set.set(m);
            }
            Ok(set)
        }
        "bitmap" => {
            let hex: String = lines.flat_map(|(_, l)| l.split_whitespace()).collect();
            let bytes = hex::decode(&hex).map_err(|e| parse_err(hline + 1, e.to_string()))?;
            if bytes.len() != horizon.div_ceil(8) {
                return Err(parse_err(
                    hline + 1,
                    format!("expected {} bytes, found {}", horizon.div_ceil(8), bytes.len()),
                ));
            }
            let mut words = vec![0u64; horizon.div_ceil(64)];
            for (j, b) in bytes.iter().enumerate() {
                words[j / 8] |= (*b as u64) << (8 * (j % 8));
            }
            if horizon % 8 != 0 && bytes.last().is_some_and(|b| b >> (horizon % 8) != 0) {
                return Err(parse_err(hline + 1, "bits set beyond the horizon"));
            }
            FiniteIntegerSet::from_words(horizon, words)
        }
        _ => Err(parse_err(hline, format!("unknown header `{kind}`"))),
    }
}
