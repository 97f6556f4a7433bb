//! Complex scalar helpers and the JSON encoding shared by every file format.
//!
//! On the wire a scalar is either a plain number (real) or a `[re, im]` pair.
//! Output always uses the pair form so that doubles round-trip bit-exactly,
//! including the sign of zero imaginary parts.

use num_complex::Complex64;
use serde::de::{Deserializer, Error as _};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireScalar {
    Real(f64),
    Pair([f64; 2]),
}

impl From<WireScalar> for C64 {
    fn from(w: WireScalar) -> Self {
        match w {
            WireScalar::Real(x) => re(x),
            WireScalar::Pair([a, b]) => C64::new(a, b),
        }
    }
}

#[derive(Serialize)]
struct Pair(f64, f64);

/// `#[serde(with = "scalar::list")]` for `Vec<C64>` fields.
pub mod list {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[C64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for z in values {
            seq.serialize_element(&Pair(z.re, z.im))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<C64>, D::Error> {
        let raw = Vec::<WireScalar>::deserialize(d)?;
        let out: Vec<C64> = raw.into_iter().map(C64::from).collect();
        if out.iter().any(|z| !is_finite(*z)) {
            return Err(D::Error::custom("non-finite scalar"));
        }
        Ok(out)
    }
}

/// Largest modulus in a list, 0 for an empty list.
pub fn max_abs(values: &[C64]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// A `±` choice, written `"+"` / `"-"` on the wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Sign {
    #[default]
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" | "1" | "+1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            other => Err(format!("expected + or -, got {other:?}")),
        }
    }
}
