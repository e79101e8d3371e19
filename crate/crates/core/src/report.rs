//! Check reports: deterministic, serializable verdicts shared by every
//! checker in the crate.

use serde::Serialize;

/// One failing instance of a checked identity.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// The instance that failed, e.g. a label tuple or a move sequence.
    pub witness: String,
    /// What differed, usually both sides of the identity.
    pub detail: String,
}

/// Outcome of one named check over a family of instances.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: String,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            status: "pass".to_string(),
            instances_checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn tick(&mut self) {
        self.instances_checked += 1;
    }

    pub fn fail(&mut self, witness: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure { witness: witness.into(), detail: detail.into() });
        self.status = "fail".to_string();
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One human-readable line: `name: pass (n instances)` or the failure count.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: pass ({} instances)", self.name, self.instances_checked)
        } else {
            format!(
                "{}: FAIL ({} of {} instances; first: {})",
                self.name,
                self.failures.len(),
                self.instances_checked,
                self.failures[0].witness
            )
        }
    }
}
