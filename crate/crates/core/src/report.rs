//! Structured pass/fail records emitted by every verification step.

use serde::{Deserialize, Serialize};

use crate::parabolic::SimpleSubset;

/// One verification outcome for one instance.
///
/// Serializes as `{"check", "n", "subset", "pass", "detail"}`; failing
/// reports carry the counterexample in `detail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub subset: Vec<usize>,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn new(check: &str, subset: &SimpleSubset, pass: bool, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            n: subset.n(),
            subset: subset.members().iter().copied().collect(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn pass(check: &str, subset: &SimpleSubset, detail: impl Into<String>) -> Self {
        CheckReport::new(check, subset, true, detail)
    }

    pub fn fail(check: &str, subset: &SimpleSubset, detail: impl Into<String>) -> Self {
        CheckReport::new(check, subset, false, detail)
    }

    /// One human-readable line, e.g. `PASS vanishing n=5 I={1,4}: ...`.
    pub fn to_text(&self) -> String {
        let subset: Vec<String> = self.subset.iter().map(usize::to_string).collect();
        format!(
            "{} {} n={} I={{{}}}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.n,
            subset.join(","),
            self.detail
        )
    }
}
