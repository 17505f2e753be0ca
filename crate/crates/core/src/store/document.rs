//! Schema-versioned JSON documents for computed tables. Exact values travel
//! as decimal strings (integers) or {num, den} string pairs (rationals),
//! polynomials as ascending coefficient arrays; floating point never enters
//! an exact payload, and serialize/parse round-trips are the identity.

use num::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::rat::{bigint_from_string, bigint_to_string, is_integer};
use crate::exact::{Poly, Rat, RatFunc, Var};

pub const SCHEMA_VERSION: u32 = 1;

/// One self-describing output document: what produced it, the exact command,
/// free-form metadata (ranges, RNG specification), and the payload itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: u32,
    pub generator: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub metadata: Map<String, Value>,
    pub payload: Value,
}

impl TableDocument {
    pub fn new(generator: impl Into<String>, command: impl Into<String>, payload: Value) -> Self {
        TableDocument {
            schema_version: SCHEMA_VERSION,
            generator: generator.into(),
            command: command.into(),
            metadata: Map::new(),
            payload,
        }
    }

    pub fn with_metadata(mut self, key: &str, value: Value) -> Self {
        self.metadata.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<TableDocument> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument { what: format!("malformed document: {e}") })
    }
}

/// Integer as a decimal string; no width limit, no precision loss.
pub fn json_bigint(n: &BigInt) -> Value {
    Value::String(bigint_to_string(n))
}

pub fn parse_bigint(v: &Value) -> Result<BigInt> {
    v.as_str()
        .and_then(bigint_from_string)
        .ok_or_else(|| Error::InvalidArgument { what: format!("expected decimal string, got {v}") })
}

/// Rational as a decimal string when it is an integer, otherwise as a
/// {num, den} pair of decimal strings with den > 0.
pub fn json_rat(r: &Rat) -> Value {
    if is_integer(r) {
        json_bigint(r.numer())
    } else {
        json!({ "num": bigint_to_string(r.numer()), "den": bigint_to_string(r.denom()) })
    }
}

pub fn parse_rat(v: &Value) -> Result<Rat> {
    if let Some(obj) = v.as_object() {
        let field = |key: &str| {
            obj.get(key)
                .ok_or_else(|| Error::InvalidArgument {
                    what: format!("rational object missing \"{key}\": {v}"),
                })
                .and_then(parse_bigint)
        };
        let num = field("num")?;
        let den = field("den")?;
        if den == BigInt::from(0) {
            return Err(Error::ZeroDenominator);
        }
        return Ok(Rat::new(num, den));
    }
    parse_bigint(v).map(Rat::from_integer)
}

/// Ascending coefficient array.
pub fn json_rat_slice(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(json_rat).collect())
}

pub fn parse_rat_slice(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidArgument { what: format!("expected array, got {v}") })?
        .iter()
        .map(parse_rat)
        .collect()
}

pub fn json_poly(p: &Poly) -> Value {
    json_rat_slice(p.coeffs())
}

pub fn parse_poly(v: &Value, var: Var) -> Result<Poly> {
    Ok(Poly::new(parse_rat_slice(v)?, var))
}

/// Rational function as numerator/denominator coefficient arrays.
pub fn json_ratfunc(f: &RatFunc) -> Value {
    json!({ "num": json_poly(f.num()), "den": json_poly(f.den()) })
}

pub fn parse_ratfunc(v: &Value, var: Var) -> Result<RatFunc> {
    let obj = v.as_object().ok_or_else(|| Error::InvalidArgument {
        what: format!("expected num/den object, got {v}"),
    })?;
    let part = |key: &str| {
        obj.get(key)
            .ok_or_else(|| Error::InvalidArgument {
                what: format!("rational function missing \"{key}\": {v}"),
            })
            .and_then(|inner| parse_poly(inner, var))
    };
    RatFunc::new(part("num")?, part("den")?)
}
