//! Violation reports shared by the structural checkers.

use serde::{Deserialize, Serialize};

/// How many witnesses a report keeps verbatim; the total count is exact.
pub const WITNESS_CAP: usize = 64;

/// One violated law together with the element tuple that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Short identifier of the violated law, e.g. `"hom.compat"` or `"cond.a"`.
    pub law: String,
    /// Element indices (or vertex indices) at which the law fails.
    pub witness: Vec<usize>,
}

/// Outcome of an exhaustive structural check. Empty iff the object is valid.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CheckReport {
    /// What was checked, e.g. `"hom Z4 -> Z2"`.
    pub context: String,
    /// Violations found, capped at [`WITNESS_CAP`] entries.
    pub violations: Vec<Violation>,
    /// Exact number of violations, including those beyond the cap.
    pub total_violations: usize,
}

impl CheckReport {
    pub fn new(context: impl Into<String>) -> Self {
        CheckReport { context: context.into(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.total_violations == 0
    }

    pub fn record(&mut self, law: impl Into<String>, witness: Vec<usize>) {
        if self.violations.len() < WITNESS_CAP {
            self.violations.push(Violation { law: law.into(), witness });
        }
        self.total_violations += 1;
    }

    /// First violation in recording order, if any.
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn merge(&mut self, other: CheckReport) {
        for v in other.violations {
            if self.violations.len() < WITNESS_CAP {
                self.violations.push(v);
            }
        }
        self.total_violations += other.total_violations;
    }
}
