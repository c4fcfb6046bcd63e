//! Check records and line-oriented JSON reports.

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// An ordered list of checks produced by one suite.
#[derive(Clone, Debug)]
pub struct Suite {
    name: String,
    checks: Vec<Check>,
    clock: Instant,
}

impl Suite {
    pub fn new(name: &str) -> Self {
        Suite { name: name.to_string(), checks: Vec::new(), clock: Instant::now() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    fn push(&mut self, id: &str, status: Status, expected: String, actual: String) {
        let now = Instant::now();
        let elapsed = now.duration_since(self.clock).as_millis() as u64;
        self.clock = now;
        self.checks.push(Check {
            suite: self.name.clone(),
            check: id.to_string(),
            status,
            expected,
            actual,
            elapsed_ms: Some(elapsed),
        });
    }

    /// Passes iff `actual == expected`.
    pub fn eq<T: PartialEq + Display>(&mut self, id: &str, expected: T, actual: T) -> bool {
        let pass = expected == actual;
        self.push(id, if pass { Status::Pass } else { Status::Fail }, expected.to_string(), actual.to_string());
        pass
    }

    pub fn holds(&mut self, id: &str, pass: bool) -> bool {
        self.eq(id, true, pass)
    }

    /// Records a check whose pass/fail is decided by the caller.
    pub fn record(&mut self, id: &str, pass: bool, expected: impl Display, actual: impl Display) -> bool {
        self.push(id, if pass { Status::Pass } else { Status::Fail }, expected.to_string(), actual.to_string());
        pass
    }

    /// Records an error as a failed check.
    pub fn error(&mut self, id: &str, err: impl Display) {
        self.push(id, Status::Fail, "no error".into(), format!("error: {err}"));
    }

    pub fn skip(&mut self, id: &str, reason: &str) {
        self.push(id, Status::Skipped, String::new(), reason.to_string());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub summary: bool,
    pub version: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub inputs: Vec<(String, String)>,
}

/// Collected suites with the hashes of their inputs.
#[derive(Default)]
pub struct Report {
    pub suites: Vec<Suite>,
    pub inputs: Vec<(String, String)>,
}

impl Report {
    pub fn add(&mut self, s: Suite) {
        self.suites.push(s);
    }

    pub fn add_input(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.push((name.to_string(), hex(&Sha256::digest(bytes))));
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn passed(&self) -> bool {
        self.suites.iter().all(Suite::passed)
    }

    pub fn summary(&self) -> Summary {
        let count = |st| self.checks().filter(|c| c.status == st).count();
        let mut inputs = self.inputs.clone();
        inputs.sort();
        Summary {
            summary: true,
            version: env!("CARGO_PKG_VERSION"),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            inputs,
        }
    }

    /// One JSON object per check, sorted by suite then check id, then the summary.
    pub fn to_jsonl(&self, timing: bool) -> String {
        let mut checks: Vec<Check> = self.checks().cloned().collect();
        checks.sort_by(|a, b| (&a.suite, &a.check).cmp(&(&b.suite, &b.check)));
        let mut out = String::new();
        for mut c in checks {
            if !timing {
                c.elapsed_ms = None;
            }
            out.push_str(&serde_json::to_string(&c).expect("check serialises"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary()).expect("summary serialises"));
        out.push('\n');
        out
    }
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_is_sorted_and_stable() {
        let mut s = Suite::new("x");
        s.eq("b", 1, 1);
        s.eq("a", 2, 3);
        let mut r = Report::default();
        r.add(s);
        r.add_input("p", b"abc");
        let text = r.to_jsonl(false);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains("\"check\":\"a\"") && lines[0].contains("\"fail\""));
        assert!(lines[2].contains("\"failed\":1"));
        assert!(lines[2].contains("ba7816bf"));
        assert_eq!(text, r.to_jsonl(false));
        assert!(!r.passed());
    }
}
