use std::fmt;
use std::io::Write;

use groupomega::Error;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

/// Outcome of a command: text for people, JSON for programs, and whether the
/// checked property held.
pub struct Report {
    pub text: String,
    pub json: Map<String, Value>,
    pub verdict: bool,
}

impl Report {
    pub fn new(json: Value, text: String) -> Report {
        let Value::Object(json) = json else {
            panic!("reports are JSON objects");
        };
        Report { text, json, verdict: true }
    }

    pub fn with_verdict(mut self, holds: bool) -> Report {
        self.verdict = holds;
        self
    }

    /// Writes to stdout; a closed pipe is not an error.
    pub fn print(&self, json: bool) {
        let mut body = if json {
            let mut out = Map::new();
            out.insert("schema".into(), SCHEMA.into());
            out.extend(self.json.clone());
            serde_json::to_string_pretty(&Value::Object(out)).expect("reports serialize")
        } else {
            self.text.clone()
        };
        if !body.ends_with('\n') {
            body.push('\n');
        }
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Budget(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Usage(format!("malformed JSON: {e}"))
    }
}
