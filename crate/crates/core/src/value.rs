//! Exact filtration values.
//!
//! Every number that enters or leaves the library is an exact rational. On the
//! wire a rational is the integer pair `[numerator, denominator]`; on input we
//! additionally accept bare integers and strings such as `"3"`, `"-1.25"` or
//! `"7/4"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub type Value = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as an exact rational")]
pub struct ParseValueError {
    pub input: String,
}

pub fn int(n: i64) -> Value {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Value {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer, a fraction `p/q` or a finite decimal `-12.0625` exactly.
pub fn parse_value(input: &str) -> Result<Value, ParseValueError> {
    let err = || ParseValueError {
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{}{}", if whole.is_empty() { "0" } else { whole }, frac);
    let num = BigInt::from_str(&digits).map_err(|_| err())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let v = BigRational::new(num, den);
    Ok(if neg { -v } else { v })
}

pub fn format_value(v: &Value) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// A value on the extended real line; only `+∞` is needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ext {
    Finite(Value),
    Infinite,
}

impl Ext {
    pub fn finite(&self) -> Option<&Value> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Ext::Infinite)
    }

    pub fn zero() -> Self {
        Ext::Finite(Value::zero())
    }
}

impl From<Value> for Ext {
    fn from(v: Value) -> Self {
        Ext::Finite(v)
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => a.cmp(b),
            (Ext::Finite(_), Ext::Infinite) => Ordering::Less,
            (Ext::Infinite, Ext::Finite(_)) => Ordering::Greater,
            (Ext::Infinite, Ext::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Finite(v) => write!(f, "{}", format_value(v)),
            Ext::Infinite => write!(f, "inf"),
        }
    }
}

fn serialize_bigint<S: SerializeSeq>(seq: &mut S, n: &BigInt) -> Result<(), S::Error> {
    match n.to_i64() {
        Some(small) => seq.serialize_element(&small),
        None => seq.serialize_element(&n.to_string()),
    }
}

fn serialize_pair<S: Serializer>(v: &Value, serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(2))?;
    serialize_bigint(&mut seq, v.numer())?;
    serialize_bigint(&mut seq, v.denom())?;
    seq.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntLike {
    Int(i64),
    Text(String),
}

impl IntLike {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntLike::Int(n) => Ok(BigInt::from(n)),
            IntLike::Text(s) => BigInt::from_str(s.trim())
                .map_err(|_| E::custom(format!("invalid integer {s:?}"))),
        }
    }
}

struct ValueVisitor {
    allow_infinity: bool,
}

enum Parsed {
    Finite(Value),
    Infinite,
}

impl<'de> Visitor<'de> for ValueVisitor {
    type Value = Parsed;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an exact rational: integer, [num, den] pair, or string such as \"1.25\" or \"3/4\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Parsed, E> {
        Ok(Parsed::Finite(int(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Parsed, E> {
        Ok(Parsed::Finite(BigRational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Parsed, E> {
        Err(E::custom(format!(
            "floating-point number {v} is not exact; write it as a string, e.g. \"{v}\""
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Parsed, E> {
        let t = v.trim();
        if self.allow_infinity && matches!(t, "inf" | "+inf" | "infinity" | "∞") {
            return Ok(Parsed::Infinite);
        }
        parse_value(t).map(Parsed::Finite).map_err(E::custom)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Parsed, A::Error> {
        let num: IntLike = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(0, &"a [num, den] pair"))?;
        let den: IntLike = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(1, &"a [num, den] pair"))?;
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(3, &"a [num, den] pair"));
        }
        let num = num.into_bigint()?;
        let den = den.into_bigint()?;
        if den.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(Parsed::Finite(BigRational::new(num, den)))
    }
}

/// Serde adapter for [`Value`] fields: `#[serde(with = "hlc_core::value::exact")]`.
pub mod exact {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Value, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_pair(v, serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Value, D::Error> {
        match deserializer.deserialize_any(ValueVisitor {
            allow_infinity: false,
        })? {
            Parsed::Finite(v) => Ok(v),
            Parsed::Infinite => unreachable!(),
        }
    }
}

/// Serde adapter for `Vec<Value>`.
pub mod exact_vec {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::exact")] Value);

    pub fn serialize<S: Serializer>(v: &[Value], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&Wrap(x.clone()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Value>, D::Error> {
        let v: Vec<Wrap> = Vec::deserialize(deserializer)?;
        Ok(v.into_iter().map(|w| w.0).collect())
    }
}

/// Serde adapter for `Option<Value>`.
pub mod exact_opt {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::exact")] Value);

    pub fn serialize<S: Serializer>(v: &Option<Value>, serializer: S) -> Result<S::Ok, S::Error> {
        v.clone().map(Wrap).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<Value>, D::Error> {
        Ok(Option::<Wrap>::deserialize(deserializer)?.map(|w| w.0))
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Ext::Finite(v) => serialize_pair(v, serializer),
            Ext::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(
            match deserializer.deserialize_any(ValueVisitor {
                allow_infinity: true,
            })? {
                Parsed::Finite(v) => Ext::Finite(v),
                Parsed::Infinite => Ext::Infinite,
            },
        )
    }
}

/// `|a - b|`.
pub fn abs_diff(a: &Value, b: &Value) -> Value {
    (a - b).abs()
}
