//! Bookkeeping shared by every verification routine: how many checks ran,
//! which failed, and which witnesses were recorded on the way.

use serde::Serialize;

/// A failed check, with enough serialized input to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub operation: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// An object recorded because it certifies a claim, e.g. a boost that is
/// Poincaré but not trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub operation: String,
    pub inputs: String,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub witnesses: Vec<Witness>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one check; on failure the inputs closure is evaluated and the
    /// failure recorded.
    pub fn check(
        &mut self,
        ok: bool,
        operation: &str,
        inputs: impl FnOnce() -> String,
        expected: impl ToString,
        actual: impl ToString,
    ) -> bool {
        self.checks_run += 1;
        if !ok {
            self.failures.push(Failure {
                operation: operation.to_string(),
                inputs: inputs(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        ok
    }

    /// Shorthand for a boolean property that must hold.
    pub fn expect(&mut self, ok: bool, operation: &str, inputs: impl FnOnce() -> String) -> bool {
        self.check(ok, operation, inputs, true, ok)
    }

    pub fn witness(&mut self, operation: &str, inputs: String, note: impl Into<String>) {
        self.witnesses.push(Witness {
            operation: operation.to_string(),
            inputs,
            note: note.into(),
        });
    }

    pub fn merge(&mut self, other: Tally) {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
        self.witnesses.extend(other.witnesses);
    }
}
