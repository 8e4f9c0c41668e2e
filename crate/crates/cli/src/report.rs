//! Structured command reports with human and JSON renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(check: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass, detail: detail.into() }
    }
}

/// Timings are kept out of the JSON form so that reports stay byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs_digest: String,
    pub results: serde_json::Value,
    pub verdicts: Vec<Verdict>,
    #[serde(skip)]
    pub summary: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: String, canonical_inputs: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            inputs_digest: digest(canonical_inputs),
            results: serde_json::Value::Null,
            verdicts: Vec::new(),
            summary: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// 0 when every verdict passes, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "inputs: sha256:{}", self.inputs_digest);
        for line in &self.summary {
            let _ = writeln!(out, "{line}");
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "{} {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.check, v.detail);
        }
        let _ = writeln!(out, "time: {:.3}s", self.elapsed.as_secs_f64());
        out
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
