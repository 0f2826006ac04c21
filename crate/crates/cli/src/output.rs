use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    InputError,
    Disagreement,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::Disagreement => 2,
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

/// A named cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// The single structured output object.
#[derive(Debug, Default, Serialize)]
pub struct Document {
    pub input: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Seconds per phase; empty unless timings were requested.
    pub timings: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub human: Vec<String>,
}

impl Document {
    pub fn failed_checks(&self) -> bool {
        self.checks.iter().any(|c| !c.passed)
    }
}

pub fn emit(doc: &Document, format: Format) {
    let mut text = String::new();
    match format {
        Format::Json => {
            text.push_str(&serde_json::to_string_pretty(doc).expect("document serializes"));
            text.push('\n');
        }
        Format::Human => {
            for line in &doc.human {
                text.push_str(&format!("{line}\n"));
            }
            for c in &doc.checks {
                text.push_str(&format!("check {} [{}] {}\n", c.name, if c.passed { "ok" } else { "FAILED" }, c.detail));
            }
            if !doc.timings.is_empty() {
                let t: Vec<String> = doc.timings.iter().map(|(k, v)| format!("{k} {v:.3}s")).collect();
                text.push_str(&format!("timings: {}\n", t.join(", ")));
            }
        }
    }
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Some(e) = &doc.error {
        eprintln!("error: {e}");
    }
}
