use std::fmt::Write as _;

use serde::Serialize;

use crate::numeric::Backend;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement. `tolerance` is `0` for exact comparisons.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub measured: String,
    pub expected: String,
    pub tolerance: f64,
    pub anchor: String,
    pub backend: Backend,
}

impl Check {
    pub fn new(id: &str, pass: bool, anchor: &str, backend: Backend) -> Check {
        Check {
            id: id.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            measured: String::new(),
            expected: String::new(),
            tolerance: 0.0,
            anchor: anchor.to_string(),
            backend,
        }
    }

    pub fn values(mut self, measured: impl ToString, expected: impl ToString) -> Check {
        self.measured = measured.to_string();
        self.expected = expected.to_string();
        self
    }

    pub fn tol(mut self, tol: f64) -> Check {
        self.tolerance = tol;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub scenario: String,
    pub backend: Backend,
    pub tolerance: f64,
    pub suites: Vec<String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(scenario: &str, backend: Backend, tolerance: f64, suites: Vec<String>, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        Report {
            schema: super::scenario::SCHEMA_VERSION,
            scenario: scenario.to_string(),
            backend,
            tolerance,
            suites,
            checks,
            summary: Summary { passed, failed },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "scenario {} | backend {} | tol {:e} | suites {}",
            self.scenario,
            self.backend.name(),
            self.tolerance,
            self.suites.join(",")
        );
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(out, "{tag}  {:<width$}  [{}]  {}", c.id, c.backend.name(), c.measured);
            if !c.expected.is_empty() {
                let _ = write!(out, "  (expected {})", c.expected);
            }
            if c.tolerance > 0.0 {
                let _ = write!(out, "  tol {:e}", c.tolerance);
            }
            let _ = writeln!(out, "  -- {}", c.anchor);
        }
        let _ = writeln!(out, "{} passed, {} failed", self.summary.passed, self.summary.failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted_and_counted() {
        let checks = vec![
            Check::new("b/two", false, "second", Backend::Float).values("1", "0").tol(1e-9),
            Check::new("a/one", true, "first", Backend::Exact).values("0", "0"),
        ];
        let r = Report::new("t", Backend::Exact, 1e-12, vec!["x".into()], checks);
        assert_eq!(r.checks[0].id, "a/one");
        assert_eq!(r.summary, Summary { passed: 1, failed: 1 });
        assert!(!r.all_passed());
        let text = r.to_text();
        assert!(text.contains("FAIL  b/two"));
        assert!(text.ends_with("1 passed, 1 failed\n"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["backend"], "float");
    }
}
