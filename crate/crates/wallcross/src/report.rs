//! Pass/fail records produced by the verification routines.

use std::fmt;

use serde_json::{json, Value};

/// Outcome of one named check, with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    /// Short identifier of the check.
    pub name: String,
    /// Whether every assertion of the check held.
    pub passed: bool,
    /// First failing location with both values, or informational output.
    pub detail: Option<String>,
}

impl Report {
    /// A passing report.
    pub fn pass(name: impl Into<String>) -> Report {
        Report { name: name.into(), passed: true, detail: None }
    }

    /// A passing report carrying informational output.
    pub fn pass_with(name: impl Into<String>, detail: impl Into<String>) -> Report {
        Report { name: name.into(), passed: true, detail: Some(detail.into()) }
    }

    /// A failing report with its witness.
    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Report {
        Report { name: name.into(), passed: false, detail: Some(detail.into()) }
    }

    /// JSON form used by the command-line front end.
    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.detail {
            Some(d) => write!(f, "{status} {}: {d}", self.name),
            None => write!(f, "{status} {}", self.name),
        }
    }
}

/// `true` if every report passed.
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.passed)
}
