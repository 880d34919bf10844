//! Machine- and human-readable run reports.
//!
//! A report records the command that ran, digests of the inputs it
//! consumed, and one verdict per check.  JSON output is stable-keyed and
//! contains no wall-clock data, so identical inputs produce identical
//! bytes; timing appears only in the text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

/// One named check with its outcome.  `witness` holds the full failure
/// evidence; `detail` holds informational payloads of passing checks
/// (ideal lists, component data, and the like).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<VerdictEntry>,
    /// Milliseconds per phase; never serialized, text rendering only.
    #[serde(skip)]
    pub timing_ms: Vec<(String, u128)>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.into(),
            inputs: Vec::new(),
            verdicts: Vec::new(),
            timing_ms: Vec::new(),
        }
    }

    /// Records an input by name with the SHA-256 of its raw bytes.
    pub fn add_input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.push(InputDigest {
            name: name.into(),
            sha256: format!("{:x}", Sha256::digest(bytes)),
        });
    }

    pub fn pass(&mut self, check: impl Into<String>) {
        self.verdicts.push(VerdictEntry {
            check: check.into(),
            status: Status::Pass,
            detail: None,
            witness: None,
        });
    }

    pub fn pass_with(&mut self, check: impl Into<String>, detail: serde_json::Value) {
        self.verdicts.push(VerdictEntry {
            check: check.into(),
            status: Status::Pass,
            detail: Some(detail),
            witness: None,
        });
    }

    pub fn fail(&mut self, check: impl Into<String>, witness: serde_json::Value) {
        self.verdicts.push(VerdictEntry {
            check: check.into(),
            status: Status::Fail,
            detail: None,
            witness: Some(witness),
        });
    }

    pub fn add_timing(&mut self, phase: impl Into<String>, millis: u128) {
        self.timing_ms.push((phase.into(), millis));
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status == Status::Pass)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "input {}: sha256 {}", input.name, input.sha256);
        }
        for v in &self.verdicts {
            match v.status {
                Status::Pass => {
                    let _ = writeln!(out, "check {}: pass", v.check);
                }
                Status::Fail => {
                    let _ = writeln!(out, "check {}: FAIL", v.check);
                }
            }
            if let Some(detail) = &v.detail {
                let _ = writeln!(out, "  detail: {detail}");
            }
            if let Some(witness) = &v.witness {
                let _ = writeln!(out, "  witness: {witness}");
            }
        }
        for (phase, ms) in &self.timing_ms {
            let _ = writeln!(out, "timing {phase}: {ms} ms");
        }
        let passed = self
            .verdicts
            .iter()
            .filter(|v| v.status == Status::Pass)
            .count();
        let _ = writeln!(
            out,
            "result: {} ({passed}/{} checks passed)",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.verdicts.len()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> RunReport {
        let mut report = RunReport::new("brace verify --catalog trivial:cyclic:2");
        report.add_input("catalog:trivial:cyclic:2", b"table-bytes");
        report.pass("group-axioms-dot");
        report.pass_with("ideals", json!([[0], [0, 1]]));
        report.fail("relation", json!({"a": 1, "b": 0, "c": 1}));
        report.add_timing("verify", 3);
        report
    }

    #[test]
    fn json_round_trips_and_omits_timing() {
        let report = sample();
        let text = report.to_json();
        assert!(!text.contains("timing"));
        assert!(text.contains("\"schema\": 1"));
        let back: RunReport = serde_json::from_str(&text).unwrap();
        let mut expected = report.clone();
        expected.timing_ms.clear();
        assert_eq!(back, expected);
    }

    #[test]
    fn identical_reports_serialize_identically() {
        assert_eq!(sample().to_json(), sample().to_json());
    }

    #[test]
    fn exit_code_tracks_failures() {
        let mut report = RunReport::new("x");
        report.pass("a");
        assert_eq!(report.exit_code(), 0);
        report.fail("b", json!({}));
        assert_eq!(report.exit_code(), 1);
        assert!(!report.all_passed());
    }

    #[test]
    fn text_rendering_shows_timing_and_witnesses() {
        let text = sample().to_text();
        assert!(text.contains("check relation: FAIL"));
        assert!(text.contains("witness: {\"a\":1"));
        assert!(text.contains("timing verify: 3 ms"));
        assert!(text.contains("result: FAIL (2/3 checks passed)"));
    }

    #[test]
    fn digests_are_standard_sha256() {
        let mut report = RunReport::new("x");
        report.add_input("empty", b"");
        assert_eq!(
            report.inputs[0].sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
