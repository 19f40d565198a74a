//! Pass/fail verdicts with exact witnesses.

use crate::linalg::Vector;

/// Outcome of one identity or operator check.
///
/// A failing report always carries a witness; re-evaluating the failed
/// clause at the witness indices reproduces the discrepancy exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub pass: bool,
    /// Name of the identity or check that was evaluated.
    pub identity: String,
    /// Set only on failure.
    pub witness: Option<Witness>,
    /// Degenerate-case annotation, e.g. a coefficient that vanishes in the
    /// ambient characteristic and makes one side of a condition vacuous.
    pub note: Option<String>,
}

/// The first failing basis tuple, in lexicographic order, together with the
/// exact residual there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which clause of a multi-clause check failed.
    pub clause: String,
    /// Basis indices of the failing tuple; empty for global clauses such as
    /// nondegeneracy.
    pub indices: Vec<usize>,
    /// Exact nonzero residual. For a global clause this holds the offending
    /// object instead (e.g. a kernel vector of a singular form).
    pub discrepancy: Vector,
}

/// Outcome of a parameterized family of checks, e.g. the operator-power
/// suites. Claims are emitted in a fixed order so serialized reports are
/// byte-reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub claims: Vec<SuiteClaim>,
}

/// One claim instance; `p`/`q` are the power parameters (0 = not used).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteClaim {
    pub claim: String,
    pub p: u32,
    pub q: u32,
    pub report: CheckReport,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.report.pass)
    }
}

impl CheckReport {
    pub fn pass(identity: impl Into<String>) -> Self {
        CheckReport {
            pass: true,
            identity: identity.into(),
            witness: None,
            note: None,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        clause: impl Into<String>,
        indices: Vec<usize>,
        discrepancy: Vector,
    ) -> Self {
        CheckReport {
            pass: false,
            identity: identity.into(),
            witness: Some(Witness {
                clause: clause.into(),
                indices,
                discrepancy,
            }),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
