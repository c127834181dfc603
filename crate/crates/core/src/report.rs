use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of an exhaustive verification sweep.
///
/// `counterexamples` are violations of the property under test and make the
/// report fail. `flagged` holds findings that are reported separately without
/// failing the sweep (e.g. sets that only pass a truncated test).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: u64,
    pub counterexamples: Vec<String>,
    pub flagged: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: 0,
            counterexamples: Vec::new(),
            flagged: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Records one check; a failing check stores the lazily built message.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.counterexamples.push(describe());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn flag(&mut self, finding: impl Into<String>) {
        self.flagged.push(finding.into());
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks += other.checks;
        self.counterexamples.extend(other.counterexamples);
        self.flagged.extend(other.flagged);
        self.notes.extend(other.notes);
    }
}
