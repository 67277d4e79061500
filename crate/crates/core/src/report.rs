//! Pass/fail records for identity checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::rational::{self, Rational};

/// Where two sides of an identity first disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

/// Outcome of one identity check. A failing report always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TauReport {
    pub fn new(identity: impl Into<String>) -> Self {
        Self { identity: identity.into(), params: BTreeMap::new(), pass: true, witness: None }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Records the first disagreement, if any; later ones are ignored.
    pub fn record(&mut self, difference: Option<(String, Rational, Rational)>) {
        if !self.pass {
            return;
        }
        if let Some((monomial, lhs, rhs)) = difference {
            self.pass = false;
            self.witness = Some(Witness { monomial, lhs, rhs });
        }
    }

    pub fn with(mut self, difference: Option<(String, Rational, Rational)>) -> Self {
        self.record(difference);
        self
    }

    /// One line for terminal output.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {} [{}]", self.identity, params.join(" "));
        if let Some(w) = &self.witness {
            line.push_str(&format!(" at {}: lhs={} rhs={}", w.monomial, w.lhs, w.rhs));
        }
        line
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
