//! Exact JSON encoding for big integers and fractions.
//!
//! Integers are emitted as plain JSON numbers of any length (serde_json is
//! built with `arbitrary_precision`), fractions as `"n/d"` strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn number(x: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&x.to_string()).expect("integer literal is a JSON number")
}

pub fn bigint_value(x: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(number(x))
}

pub fn bigints_value(xs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(xs.iter().map(bigint_value).collect())
}

pub fn serialize_bigint<S: Serializer>(x: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    number(x).serialize(serializer)
}

pub fn deserialize_bigint<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
    let n = serde_json::Number::deserialize(deserializer)?;
    BigInt::from_str(&n.to_string()).map_err(D::Error::custom)
}

pub fn serialize_bigints<S: Serializer>(xs: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}

pub fn deserialize_bigints<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> Result<Vec<BigInt>, D::Error> {
    let ns = Vec::<serde_json::Number>::deserialize(deserializer)?;
    ns.iter()
        .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
        .collect()
}

pub fn fraction_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_fraction(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d = BigInt::from_str(d.trim()).ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(BigInt::from_str(n.trim()).ok()?, d))
        }
        None => Some(BigRational::from_integer(BigInt::from_str(s.trim()).ok()?)),
    }
}

pub fn serialize_fraction<S: Serializer>(x: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&fraction_string(x))
}

pub fn deserialize_fraction<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> Result<BigRational, D::Error> {
    let s = String::deserialize(deserializer)?;
    parse_fraction(&s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}")))
}

pub fn serialize_fractions<S: Serializer>(
    xs: &[BigRational],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&fraction_string(x))?;
    }
    seq.end()
}

pub fn deserialize_fractions<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> Result<Vec<BigRational>, D::Error> {
    let ss = Vec::<String>::deserialize(deserializer)?;
    ss.iter()
        .map(|s| parse_fraction(s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrapper {
        #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
        x: BigInt,
        #[serde(serialize_with = "serialize_fractions", deserialize_with = "deserialize_fractions")]
        u: Vec<BigRational>,
    }

    #[test]
    fn huge_integers_survive_json() {
        let w = Wrapper {
            x: BigInt::from(7).pow(60),
            u: vec![BigRational::new(3.into(), 4.into()), BigRational::from_integer(2.into())],
        };
        let s = serde_json::to_string(&w).unwrap();
        assert!(s.contains(&BigInt::from(7).pow(60).to_string()));
        assert!(s.contains("\"3/4\""));
        let back: Wrapper = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
