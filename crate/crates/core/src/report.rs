//! Pass/fail check records shared by the verification routines and the CLI.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()) }
    }

    /// A check that passes iff `ok`; the witness closure is only run on failure.
    pub fn from_result(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    /// A passing check that still records an informational note.
    pub fn pass_with(name: impl Into<String>, note: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, witness: Some(note.into()) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new(), summary: Summary::default() }
    }

    pub fn push(&mut self, check: Check) {
        if check.passed() {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}
