//! Structured pass/fail evidence for axiom and theorem checks.

use std::fmt;

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Short stable identifier, e.g. `"axiom-iii"` or `"restriction-identity"`.
    pub name: String,
    pub passed: bool,
    /// Minimal witness of the first failure, empty when the check passed.
    pub witness: String,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Check { name: name.to_string(), passed: true, witness: String::new() }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed: false, witness: witness.into() }
    }
}

/// An ordered list of checks. The report passes iff every check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Record a pass or, when `witness` is `Some`, a failure.
    pub fn record(&mut self, name: &str, witness: Option<String>) {
        match witness {
            None => self.push(Check::pass(name)),
            Some(w) => self.push(Check::fail(name, w)),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// First failed check, if any.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "check {:<28} PASS", c.name)?;
            } else {
                writeln!(f, "check {:<28} FAIL  witness: {}", c.name, c.witness)?;
            }
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}
