//! Validation reports shared by every law checker.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A single violated law together with the ids that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, witness: Vec<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            law: law.to_string(),
            witness,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Whether some violation of `law` was recorded.
    pub fn has(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [{}] {}", self.law, self.witness.join(", "), self.detail)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// One named check in a multi-part verification, e.g. the triangle
/// identities of an adjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub tag: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

pub const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSuite {
    pub checks: Vec<NamedCheck>,
}

impl CheckSuite {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record a check that passed iff `witnesses` is empty. Long witness
    /// lists are cut to the first [`MAX_WITNESSES`] plus a count.
    pub fn record(&mut self, name: &str, tag: &str, mut witnesses: Vec<String>) {
        if witnesses.len() > MAX_WITNESSES {
            let more = witnesses.len() - MAX_WITNESSES;
            witnesses.truncate(MAX_WITNESSES);
            witnesses.push(format!("... and {more} more"));
        }
        self.checks.push(NamedCheck {
            name: name.to_string(),
            tag: tag.to_string(),
            passed: witnesses.is_empty(),
            witnesses,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: CheckSuite) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for CheckSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{mark} {}", c.name)?;
            if !c.passed {
                write!(f, " [{}]", c.witnesses.join("; "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_until_a_witness_is_recorded() {
        let mut s = CheckSuite::new();
        s.record("a", "tag", vec![]);
        assert!(s.all_passed());
        s.record("b", "tag", vec!["w".into()]);
        assert!(!s.all_passed());
        assert!(!s.get("b").unwrap().passed);
    }

    #[test]
    fn reports_find_laws() {
        let mut r = ValidationReport::new();
        r.push("associativity", vec!["h".into()], "x");
        assert!(r.has("associativity") && !r.is_ok());
        assert_eq!(r.first("associativity").unwrap().witness, vec!["h"]);
    }
}
