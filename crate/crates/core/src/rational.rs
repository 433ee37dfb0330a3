//! Exact rationals and their string form.
//!
//! Rationals cross every serialization boundary as `"p/q"` strings (or a bare
//! integer when the denominator is one), never as floats.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |m: &str| Error::Parse {
        line: 0,
        message: format!("`{s}`: {m}"),
    };
    if s.is_empty() {
        return Err(bad("empty rational"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if !fp.chars().all(|c| c.is_ascii_digit()) || !ip.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad("bad decimal"));
        }
        let digits = format!("{ip}{fp}");
        let digits = if digits.is_empty() { "0".into() } else { digits };
        let num: BigInt = digits.parse().map_err(|_| bad("bad decimal"))?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let r = Rational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad("not a rational"))?;
    Ok(Rational::from_integer(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut small: i128 = 1;
    let mut big: Option<BigInt> = None;
    for r in values {
        if let Some(acc) = big.as_mut() {
            *acc = acc.lcm(r.denom());
            continue;
        }
        let next = r
            .denom()
            .to_i128()
            .and_then(|d| (small / small.gcd(&d)).checked_mul(d));
        match next {
            Some(l) => small = l,
            None => big = Some(BigInt::from(small).lcm(r.denom())),
        }
    }
    big.unwrap_or_else(|| BigInt::from(small))
}

/// `n / d` reduced with machine-word gcd. Panics if `d == 0`.
pub(crate) fn ratio_i128(n: i128, d: i128) -> Rational {
    assert!(d != 0, "zero denominator");
    let g = n.gcd(&d);
    let (n, d) = if d < 0 { (-n / g, -d / g) } else { (n / g, d / g) };
    Rational::new_raw(BigInt::from(n), BigInt::from(d))
}

/// Numerator and denominator as machine words, when they fit.
pub(crate) fn as_i128(r: &Rational) -> Option<(i128, i128)> {
    Some((r.numer().to_i128()?, r.denom().to_i128()?))
}

/// `Σ values`, accumulated in machine words while denominators stay small.
pub(crate) fn sum_small<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut it = values.into_iter();
    let (mut n, mut d): (i128, i128) = (0, 1);
    while let Some(r) = it.next() {
        let step = as_i128(r).and_then(|(rn, rd)| {
            let g = d.gcd(&rd);
            let l = (d / g).checked_mul(rd)?;
            let a = n.checked_mul(l / d)?;
            let b = rn.checked_mul(l / rd)?;
            let s = a.checked_add(b)?;
            let h = s.gcd(&l).max(1);
            Some((s / h, l / h))
        });
        match step {
            Some((sn, sd)) => (n, d) = (sn, sd),
            None => {
                return it.fold(ratio_i128(n, d) + r, |acc, x| acc + x);
            }
        }
    }
    ratio_i128(n, d)
}

/// Exact `floor(r * 2^128) mod 2^128` for `r` in `[0, 1)`; values `>= 1`
/// saturate to `u128::MAX`.
pub fn to_fixed128(r: &Rational) -> u128 {
    if r.is_negative() {
        return 0;
    }
    let scaled = (r * Rational::from_integer(BigInt::one() << 128u32)).floor();
    scaled.to_integer().to_u128().unwrap_or(u128::MAX)
}

/// Serde adapter: a rational as a `"p/q"` string.
pub mod serde_str {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_vec {
    use super::{parse_rational, Rational};
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("11/20").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("22/40").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("0.55").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_is_exact() {
        assert_eq!(rat(11, 20).to_string(), "11/20");
        assert_eq!(int(1).to_string(), "1");
    }

    #[test]
    fn fixed_point_conversion() {
        assert_eq!(to_fixed128(&rat(1, 2)), 1u128 << 127);
        assert_eq!(to_fixed128(&int(0)), 0);
        assert_eq!(to_fixed128(&int(1)), u128::MAX);
        assert_eq!(to_fixed128(&rat(1, 4)), 1u128 << 126);
    }
}
