//! Named checks with residuals and tolerances; the CLI's output unit.

use serde::Serialize;

/// One verification check: pass iff residual ≤ tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(
        name: impl Into<String>,
        residual: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            detail: detail.into(),
        }
    }
}

/// A sorted batch of checks with summary counts.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u64,
}

impl Report {
    /// Assemble a report; checks are sorted by name so the output is stable
    /// regardless of the order they were produced in.
    pub fn from_checks(mut checks: Vec<CheckResult>, wall_time_ms: u64) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks,
            passed,
            failed,
            wall_time_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_within_tolerance() {
        assert!(CheckResult::new("a", 1e-13, 1e-12, "").pass);
        assert!(!CheckResult::new("a", 2e-12, 1e-12, "").pass);
        assert!(CheckResult::new("a", 1e-12, 1e-12, "").pass);
    }

    #[test]
    fn report_counts_and_sorts() {
        let r = Report::from_checks(
            vec![
                CheckResult::new("z/second", 0.0, 1.0, ""),
                CheckResult::new("a/first", 2.0, 1.0, ""),
            ],
            7,
        );
        assert_eq!((r.passed, r.failed), (1, 1));
        assert_eq!(r.checks[0].name, "a/first");
        assert!(!r.all_passed());
    }
}
