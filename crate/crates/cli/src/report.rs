use std::collections::BTreeMap;

use ipsig_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize, Debug, Clone)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub tool_version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub parameters: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Value>,
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            inputs: Vec::new(),
            parameters: BTreeMap::new(),
            results: None,
            error: None,
            timings: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable parameter"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }
}

/// A failure on the way to a result: bad input, or a library error.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

pub fn diagnostic(f: &Failure) -> Value {
    match f {
        Failure::Io(msg) => json!({"kind": "Io", "message": msg}),
        Failure::Core(e) => {
            let mut v = json!({"kind": kind(e), "message": e.to_string()});
            let witness = match e {
                Error::NotPseudomanifold { witness, .. } => Some(json!(witness)),
                Error::NonOrientable(w) => Some(json!(w)),
                Error::DuplicateFacet(w) | Error::NonSimplexFace(w) | Error::SimplexNotInComplex(w) => Some(json!(w)),
                Error::DiagonalNotAllowable(w) => Some(json!(w)),
                Error::PerversityOutOfRange { stratum, value, max } => {
                    Some(json!({"stratum": stratum, "value": value, "max": max}))
                }
                _ => None,
            };
            if let Some(w) = witness {
                v["witness"] = w;
            }
            v
        }
    }
}
