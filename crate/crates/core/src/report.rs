//! Structured results for the verification suites.
//!
//! Suites never abort on counterexamples: they collect violations and
//! report them, so a failed claim surfaces as data rather than a panic.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The quantified domain was empty at this `n`.
    Vacuous,
}

/// Outcome of one exhaustively checked claim at a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorem_id: String,
    pub n: usize,
    pub domain_size: usize,
    pub violations: Vec<String>,
    pub status: Status,
}

impl Report {
    pub fn new(theorem_id: impl Into<String>, n: usize) -> ReportBuilder {
        ReportBuilder {
            theorem_id: theorem_id.into(),
            n,
            domain_size: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "pass (vacuous)",
        };
        write!(
            f,
            "[{tag}] {} (n={}, checked {})",
            self.theorem_id, self.n, self.domain_size
        )?;
        for v in self.violations.iter().take(5) {
            write!(f, "\n    violation: {v}")?;
        }
        if self.violations.len() > 5 {
            write!(f, "\n    ... and {} more", self.violations.len() - 5)?;
        }
        Ok(())
    }
}

/// Accumulates checked instances and violations for one claim.
pub struct ReportBuilder {
    theorem_id: String,
    n: usize,
    domain_size: usize,
    violations: Vec<String>,
}

impl ReportBuilder {
    /// Record one checked instance; `witness` describes it if it violates
    /// the claim.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.domain_size += 1;
        if !ok {
            self.violations.push(witness());
        }
    }

    pub fn finish(self) -> Report {
        let status = if !self.violations.is_empty() {
            Status::Fail
        } else if self.domain_size == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        Report {
            theorem_id: self.theorem_id,
            n: self.n,
            domain_size: self.domain_size,
            violations: self.violations,
            status,
        }
    }
}
