use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Inconclusive because the input sits on a boundary case.
    Degenerate,
    /// A claim that is recorded but not computed.
    Unchecked,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Degenerate => "DEGENERATE",
            Self::Unchecked => "UNCHECKED",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub summary: String,
    /// One line per witness: points, lines, residuals.
    pub witnesses: Vec<String>,
}

/// Outcome of a batch of named checks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, status: CheckStatus, summary: impl Into<String>, witnesses: Vec<String>) {
        debug_assert!(status != CheckStatus::Fail || !witnesses.is_empty(), "failures need a witness");
        self.checks.push(Check {
            name: name.to_string(),
            status,
            summary: summary.into(),
            witnesses,
        });
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn merge(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for VerificationReport {
    /// One line per check, witnesses indented below it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<10} {}: {}", c.status, c.name, c.summary)?;
            for w in &c.witnesses {
                writeln!(f, "           - {w}")?;
            }
        }
        Ok(())
    }
}
