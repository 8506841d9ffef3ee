//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

/// Outcome of a single identity check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Stable identifier of the check.
    pub id: String,
    /// The mathematical relation being exercised.
    pub relation: String,
    /// `exact-pass`, `numeric-pass(tol)`, or `fail`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Reproduction parameters for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
}

impl CheckRecord {
    pub fn exact(id: &str, relation: &str, ok: bool) -> Self {
        CheckRecord {
            id: id.to_string(),
            relation: relation.to_string(),
            status: if ok { "exact-pass".into() } else { "fail".into() },
            residual: None,
            params: None,
        }
    }

    pub fn numeric(id: &str, relation: &str, residual: f64, tol: f64) -> Self {
        CheckRecord {
            id: id.to_string(),
            relation: relation.to_string(),
            status: if residual <= tol {
                format!("numeric-pass({tol:e})")
            } else {
                "fail".into()
            },
            residual: Some(residual),
            params: None,
        }
    }

    pub fn with_params(mut self, params: String) -> Self {
        self.params = Some(params);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != "fail"
    }
}

/// A full suite run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: String,
    pub seed: u64,
    pub wall_time_ms: u64,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl RunReport {
    pub fn new(suite: &str, seed: u64, wall_time_ms: u64, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().all(CheckRecord::passed);
        RunReport { suite: suite.to_string(), seed, wall_time_ms, checks, passed }
    }
}
