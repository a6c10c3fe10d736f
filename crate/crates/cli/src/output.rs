//! Text and JSON renderings of command results.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use symprod_core::series::VarNames;
use symprod_core::TruncatedSeries;

/// u stands for ε^{1/4} in the elliptic genus.
pub const ELLIPTIC_NAMES: VarNames = VarNames {
    q: "q",
    t: "t",
    y: "y",
    u: "e^(1/4)",
};

/// One command result, ready to be printed either way.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub rows: Vec<Value>,
    pub text: String,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            rows: Vec::new(),
            text: String::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    /// `{index_key: index, "value": value}`
    pub fn row(&mut self, index_key: &str, index: i64, value: Value) {
        let mut m = Map::new();
        m.insert(index_key.to_string(), index.into());
        m.insert("value".to_string(), value);
        self.rows.push(Value::Object(m));
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "result": Value::Array(self.rows.clone()),
        });
        v.to_string()
    }
}

/// Integers as JSON numbers when they fit in i64, otherwise as strings.
pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

/// Array of `{var_exponents, numerator, denominator}` in print order.
/// Numerator and denominator are decimal strings so no precision is lost.
pub fn poly_json(s: &TruncatedSeries) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| {
                json!({
                    "var_exponents": { "q": e.q, "t": e.t, "y": e.y, "u": e.u },
                    "numerator": c.numer().to_string(),
                    "denominator": c.denom().to_string(),
                })
            })
            .collect(),
    )
}
