//! Small helpers for moving big integers in and out of `serde_json::Value`.
//!
//! Values that fit in an `i64` are emitted as JSON numbers; anything larger
//! becomes a decimal string. Parsing accepts both forms.

use num_bigint::BigInt;
use serde_json::Value;
use std::fmt;

/// A malformed JSON payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonError(pub String);

impl JsonError {
    pub fn new(msg: impl Into<String>) -> Self {
        JsonError(msg.into())
    }
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for JsonError {}

pub fn bigint_to_json(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(n) => Value::from(n),
        Err(_) => Value::String(v.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(JsonError::new(format!("not an integer: {}", n)))
            }
        }
        Value::String(s) => BigInt::parse_bytes(s.trim().as_bytes(), 10)
            .ok_or_else(|| JsonError::new(format!("not a decimal integer string: {:?}", s))),
        other => Err(JsonError::new(format!("expected integer, got {}", other))),
    }
}

pub fn bigints_to_json(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(bigint_to_json).collect())
}

pub fn bigints_from_json(v: &Value) -> Result<Vec<BigInt>, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError::new(format!("expected array of integers, got {}", v)))?;
    arr.iter().map(bigint_from_json).collect()
}

/// Fetch a required field from a JSON object.
pub fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, JsonError> {
    v.get(name)
        .ok_or_else(|| JsonError::new(format!("missing field {:?}", name)))
}

pub fn usize_from_json(v: &Value) -> Result<usize, JsonError> {
    v.as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| JsonError::new(format!("expected non-negative integer, got {}", v)))
}
