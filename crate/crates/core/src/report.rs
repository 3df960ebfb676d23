//! Verification outcomes. A failed identity is a report, not a panic: the
//! verifiers return the first counterexample so the CLI can print it.

/// Result of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    /// Short name of the check, e.g. `involution`.
    pub check: String,
    /// True when the identity held on the whole tested range.
    pub passed: bool,
    /// First counterexample (or extra context) when it did not.
    pub detail: Option<String>,
}

impl Verification {
    pub fn pass(check: impl Into<String>) -> Self {
        Verification {
            check: check.into(),
            passed: true,
            detail: None,
        }
    }

    pub fn fail(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Verification {
            check: check.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }

    pub fn pass_with(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Verification {
            check: check.into(),
            passed: true,
            detail: Some(detail.into()),
        }
    }
}

impl std::fmt::Display for Verification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.detail {
            Some(d) => write!(f, "{} {}", status, d),
            None => write!(f, "{}", status),
        }
    }
}
