use serde::{Deserialize, Serialize};
use std::fmt;

/// One semantic finding, tied to a location in the object under check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Stable machine-readable kind, e.g. `"proper.repeat"`, `"s3p.end_face"`.
    pub kind: String,
    /// Where: a vertex, edge index, table row — in the object's own naming.
    pub location: String,
    /// Human-readable explanation with the offending values.
    pub message: String,
}

impl Violation {
    pub fn new(
        kind: impl Into<String>,
        location: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Violation {
            kind: kind.into(),
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.kind, self.location, self.message)
    }
}

/// Outcome of a semantic check: `ok()` or the full list of violations.
///
/// Checks accumulate every violation they can find rather than stopping at
/// the first, so a report is a complete diagnosis of the object.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(
        &mut self,
        kind: impl Into<String>,
        location: impl Into<String>,
        message: impl Into<String>,
    ) {
        self.violations.push(Violation::new(kind, location, message));
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// All violations of one kind (prefix match on `.`-separated segments).
    pub fn of_kind(&self, kind: &str) -> Vec<&Violation> {
        self.violations
            .iter()
            .filter(|v| v.kind == kind || v.kind.starts_with(&format!("{kind}.")))
            .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            writeln!(f, "ok")
        } else {
            writeln!(f, "{} violation(s)", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}
