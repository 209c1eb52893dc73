//! Values compared in a check record.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest magnitude written as a JSON number.
pub const JSON_SAFE_INT: i128 = 1 << 53;

/// Integer that serializes as a decimal string above `2^53` in magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wide(pub i128);

impl Serialize for Wide {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= JSON_SAFE_INT {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Wide {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Wide;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Wide, E> {
                Ok(Wide(v as i128))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Wide, E> {
                Ok(Wide(v as i128))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Wide, E> {
                v.parse().map(Wide).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Quantity {
    Int(Wide),
    Ratio { num: Wide, den: Wide },
    Bool(bool),
    /// Sampled estimate with a 95% interval.
    Estimate { point: Wide, lo: Wide, hi: Wide },
}

impl Quantity {
    pub fn int(v: impl Into<i128>) -> Self {
        Quantity::Int(Wide(v.into()))
    }

    pub fn ratio(r: &crate::census::Rational) -> Self {
        Quantity::Ratio { num: Wide(*r.numer()), den: Wide(*r.denom()) }
    }

    pub fn estimate(e: &crate::census::fibers::Estimate) -> Self {
        let w = |v: u128| Wide(v.min(i128::MAX as u128) as i128);
        Quantity::Estimate { point: w(e.point), lo: w(e.lo), hi: w(e.hi) }
    }

    /// A deliberately wrong variant of this value.
    pub(crate) fn perturbed(&self) -> Self {
        match self {
            Quantity::Int(v) => Quantity::Int(Wide(v.0 + 1)),
            Quantity::Ratio { num, den } => Quantity::Ratio { num: Wide(num.0 + den.0), den: *den },
            Quantity::Bool(b) => Quantity::Bool(!b),
            Quantity::Estimate { point, lo, hi } => {
                Quantity::Estimate { point: Wide(point.0 + 1), lo: Wide(lo.0 + 1), hi: Wide(hi.0 + 1) }
            }
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{}", v.0),
            Quantity::Ratio { num, den } => write!(f, "{}/{}", num.0, den.0),
            Quantity::Bool(b) => write!(f, "{b}"),
            Quantity::Estimate { point, lo, hi } => write!(f, "~{} [{}..{}]", point.0, lo.0, hi.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_switches_to_string() {
        assert_eq!(serde_json::to_string(&Wide(1 << 53)).unwrap(), "9007199254740992");
        assert_eq!(serde_json::to_string(&Wide((1 << 53) + 1)).unwrap(), "\"9007199254740993\"");
        assert_eq!(serde_json::to_string(&Wide(-(1 << 60))).unwrap(), "\"-1152921504606846976\"");
        for v in [0, 5, -7, 1 << 53, (1 << 53) + 1, i128::MAX, i128::MIN + 1] {
            let s = serde_json::to_string(&Wide(v)).unwrap();
            assert_eq!(serde_json::from_str::<Wide>(&s).unwrap(), Wide(v));
        }
    }

    #[test]
    fn quantity_shape() {
        let q = Quantity::int(8);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"kind":"int","value":8}"#);
        let r = Quantity::Ratio { num: Wide(16), den: Wide(15) };
        assert_eq!(r.to_string(), "16/15");
        assert_eq!(serde_json::from_str::<Quantity>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
        assert_ne!(q.perturbed(), q);
        assert_ne!(Quantity::Bool(true).perturbed(), Quantity::Bool(true));
    }
}
