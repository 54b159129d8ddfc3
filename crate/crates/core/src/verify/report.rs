use serde::Serialize;

use super::Grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Evaluation left its domain or quadrature ran out of budget.
    Error,
}

/// An upper-bound check: pass iff `max_residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub grid: Option<Grid>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckRecord {
    pub fn measured(name: impl Into<String>, grid: Option<Grid>, max_residual: f64, tolerance: f64) -> Self {
        let status = if max_residual <= tolerance { Status::Pass } else { Status::Fail };
        CheckRecord { name: name.into(), grid, max_residual, tolerance, status, error: None }
    }

    pub fn errored(name: impl Into<String>, grid: Option<Grid>, tolerance: f64, error: String) -> Self {
        CheckRecord { name: name.into(), grid, max_residual: f64::NAN, tolerance, status: Status::Error, error: Some(error) }
    }
}

/// Agreement between two independent computations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRecord {
    pub name: String,
    pub max_rel_diff: f64,
    pub tolerance: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl OracleRecord {
    pub fn measured(name: impl Into<String>, max_rel_diff: f64, tolerance: f64) -> Self {
        let status = if max_rel_diff <= tolerance { Status::Pass } else { Status::Fail };
        OracleRecord { name: name.into(), max_rel_diff, tolerance, status, error: None }
    }

    pub fn errored(name: impl Into<String>, tolerance: f64, error: String) -> Self {
        OracleRecord { name: name.into(), max_rel_diff: f64::NAN, tolerance, status: Status::Error, error: Some(error) }
    }
}

/// A lower-bound check (non-triviality, independence): pass iff `value >= threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl BoundRecord {
    pub fn measured(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        let status = if value >= threshold { Status::Pass } else { Status::Fail };
        BoundRecord { name: name.into(), value, threshold, status, error: None }
    }

    pub fn errored(name: impl Into<String>, threshold: f64, error: String) -> Self {
        BoundRecord { name: name.into(), value: f64::NAN, threshold, status: Status::Error, error: Some(error) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<CheckRecord>,
    pub oracles: Vec<OracleRecord>,
    pub bounds: Vec<BoundRecord>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport { subject: subject.into(), checks: Vec::new(), oracles: Vec::new(), bounds: Vec::new() }
    }

    pub fn statuses(&self) -> impl Iterator<Item = Status> + '_ {
        self.checks
            .iter()
            .map(|c| c.status)
            .chain(self.oracles.iter().map(|o| o.status))
            .chain(self.bounds.iter().map(|b| b.status))
    }

    pub fn record_count(&self) -> usize {
        self.checks.len() + self.oracles.len() + self.bounds.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn from_reports(reports: Vec<VerificationReport>) -> Self {
        let mut s = Summary { records: 0, passed: 0, failed: 0, errored: 0 };
        for st in reports.iter().flat_map(|r| r.statuses()) {
            s.records += 1;
            match st {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Error => s.errored += 1,
            }
        }
        SuiteReport { reports, summary: s }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }

    /// Deterministic pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
