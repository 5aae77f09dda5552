//! Pass/fail check lists produced by the family verifiers.

use std::fmt;

/// One verified claim: a stable name, the outcome, and a witness string on
/// failure (or a short informational value on success).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub fn push(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness,
        });
    }

    pub fn pass(&mut self, name: &str, witness: Option<String>) {
        self.push(name, true, witness);
    }

    pub fn fail(&mut self, name: &str, witness: String) {
        self.push(name, false, Some(witness));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "result: {} ({} checks)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len()
        )
    }
}
