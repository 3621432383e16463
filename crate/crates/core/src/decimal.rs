//! Serde helpers that encode integers as decimal strings.
//!
//! JSON numbers are limited to what the consumer's number type can hold,
//! so every big integer crosses the serialization boundary as a string.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<T: Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn deserialize<'de, T, D>(deserializer: D) -> Result<T, D::Error>
where
    T: FromStr,
    D: Deserializer<'de>,
{
    let s = String::deserialize(deserializer)?;
    parse_integer(&s).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<T: Display, S: Serializer>(
        values: &[T],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<Vec<T>, D::Error>
    where
        T: FromStr,
        D: Deserializer<'de>,
    {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| parse_integer(s))
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)
    }
}

/// Parses a decimal integer, tolerating surrounding whitespace and a leading `+`.
pub fn parse_integer<T: FromStr>(s: &str) -> Result<T, String> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    t.parse()
        .map_err(|_| format!("`{s}` is not a decimal integer"))
}

/// Parses a comma-separated list of decimal integers.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .filter(|piece| !piece.trim().is_empty())
        .map(parse_integer)
        .collect()
}
