//! Text formats for circle sets.
//!
//! JSON: `{"intervals": [["p/q", "r/s"], …]}`.
//! Plain: one interval per line, `p/q r/s`; blank lines and `#` comments are
//! ignored.

use serde::{Deserialize, Serialize};

use super::{normalize, RawIntervalList, TorusSet};
use crate::error::{Error, Result};
use crate::rational::parse_rational;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SetFile {
    pub intervals: Vec<[String; 2]>,
}

impl From<&TorusSet> for SetFile {
    fn from(set: &TorusSet) -> Self {
        SetFile {
            intervals: set
                .intervals()
                .iter()
                .map(|iv| [iv.lo().to_string(), iv.hi().to_string()])
                .collect(),
        }
    }
}

impl Serialize for TorusSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SetFile::from(self).serialize(s)
    }
}

impl TorusSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SetFile::from(self)).expect("set file serializes")
    }

    pub fn to_lines(&self) -> String {
        self.intervals()
            .iter()
            .map(|iv| format!("{} {}\n", iv.lo(), iv.hi()))
            .collect()
    }
}

/// Parses either format and normalizes the result.
pub fn parse_set_file(text: &str) -> Result<TorusSet> {
    if text.trim_start().starts_with('{') {
        let file: SetFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut raw = RawIntervalList::default();
        for (i, [lo, hi]) in file.intervals.iter().enumerate() {
            let lo = parse_rational(lo).map_err(|e| relabel(e, i + 1))?;
            let hi = parse_rational(hi).map_err(|e| relabel(e, i + 1))?;
            raw.push(lo, hi).map_err(|e| relabel(e, i + 1))?;
        }
        return Ok(normalize(&raw));
    }
    let mut raw = RawIntervalList::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(lo), Some(hi), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected `lo hi`, got `{line}`"),
            });
        };
        let lo = parse_rational(lo).map_err(|e| relabel(e, i + 1))?;
        let hi = parse_rational(hi).map_err(|e| relabel(e, i + 1))?;
        raw.push(lo, hi).map_err(|e| relabel(e, i + 1))?;
    }
    Ok(normalize(&raw))
}

fn relabel(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn json_form() {
        let s = TorusSet::from_pairs(vec![(rat(0, 1), rat(3, 20)), (rat(1, 4), rat(3, 10))]).unwrap();
        assert_eq!(
            s.to_json(),
            r#"{"intervals":[["0","3/20"],["1/4","3/10"]]}"#
        );
        assert_eq!(parse_set_file(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn line_form_with_comments() {
        let s = parse_set_file("# a set\n0 3/20\n\n1/4 3/10 # second\n").unwrap();
        assert_eq!(s.measure(), rat(1, 5));
        assert_eq!(parse_set_file(&s.to_lines()).unwrap(), s);
    }

    #[test]
    fn malformed_inputs_report_line() {
        match parse_set_file("0 1/4\n1/2 1/3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_set_file("0 x\n").is_err());
        assert!(parse_set_file("0 1 2\n").is_err());
        assert!(parse_set_file(r#"{"intervals": [["1/2"]]}"#).is_err());
        assert!(parse_set_file("{not json").is_err());
    }

    proptest! {
        #[test]
        fn emitted_files_reparse_identically(
            cuts in proptest::collection::vec((0i64..97, 1i64..97), 1..8)
        ) {
            let pairs = cuts
                .into_iter()
                .map(|(a, len)| (rat(a, 97), rat(a + len, 97)))
                .collect();
            let s = TorusSet::from_pairs(pairs).unwrap();
            prop_assert_eq!(parse_set_file(&s.to_json()).unwrap(), s.clone());
            prop_assert_eq!(parse_set_file(&s.to_lines()).unwrap(), s);
        }
    }
}
