//! Exact rational arithmetic and its JSON encoding.
//!
//! Every bound in this crate is compared exactly. Rationals serialize as
//! `{"num": <int>, "den": <int>}` in lowest terms with a positive
//! denominator. Components that do not fit in an `i64` are written as
//! decimal strings instead of JSON numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int<T: Into<BigInt>>(v: T) -> Rational {
    BigRational::from_integer(v.into())
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Floor of a non-negative rational as `u128`, or `None` if negative or too large.
pub fn floor_u128(r: &Rational) -> Option<u128> {
    if r.is_negative() {
        return None;
    }
    r.floor().to_integer().to_u128()
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"1.38"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches('-');
        let digits: BigInt = format!(
            "{}{}",
            if whole_abs.is_empty() { "0" } else { whole_abs },
            frac
        )
        .parse()
        .ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(digits, den);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

fn component_json(v: &BigInt) -> Component {
    match v.to_i64() {
        Some(i) => Component::Int(i),
        None => Component::Text(v.to_string()),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Component {
    Int(i64),
    Text(String),
}

impl Component {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            Component::Int(i) => Ok(BigInt::from(i)),
            Component::Text(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer component {s:?}"))),
        }
    }
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", &component_json(r.numer()))?;
    st.serialize_field("den", &component_json(r.denom()))?;
    st.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Pair { num: Component, den: Component },
    Text(String),
    Int(i64),
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    match RationalRepr::deserialize(d)? {
        RationalRepr::Pair { num, den } => {
            let num = num.into_bigint()?;
            let den = den.into_bigint()?;
            if den.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        }
        RationalRepr::Text(s) => {
            parse(&s).ok_or_else(|| de::Error::custom(format!("invalid rational {s:?}")))
        }
        RationalRepr::Int(i) => Ok(int(i)),
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => super::serialize(r, s),
            None => s.serialize_none(),
        }
    }
}

/// Owned wrapper for places where a `with` attribute is awkward (maps, vectors).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JsonRational(#[serde(with = "crate::rational")] pub Rational);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("69/50"), Some(ratio(69, 50)));
        assert_eq!(parse("1.38"), Some(ratio(69, 50)));
        assert_eq!(parse("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse("7"), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&JsonRational(ratio(6, -4))).unwrap();
        assert_eq!(j, r#"{"num":-3,"den":2}"#);
        let back: JsonRational = serde_json::from_str(&j).unwrap();
        assert_eq!(back.0, ratio(-3, 2));
        let big = JsonRational(BigRational::new(BigInt::from(10).pow(30), BigInt::from(7)));
        let j = serde_json::to_string(&big).unwrap();
        assert!(j.contains("\"1000000000000000000000000000000\""));
        let back: JsonRational = serde_json::from_str(&j).unwrap();
        assert_eq!(back, big);
        let s: JsonRational = serde_json::from_str("\"1/10\"").unwrap();
        assert_eq!(s.0, ratio(1, 10));
    }
}
