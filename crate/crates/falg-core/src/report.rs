//! Per-axiom verification reports with counterexample witnesses.

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Outcome of one axiom family. A failing entry carries the first failing
/// basis tuple in lexicographic order and the exact nonzero residual, so
/// re-evaluating the axiom at the witness reproduces the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom_id: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<Vector>,
}

impl AxiomCheck {
    pub fn pass(axiom_id: &str) -> Self {
        AxiomCheck {
            axiom_id: axiom_id.to_string(),
            status: CheckStatus::Pass,
            witness: None,
            residual: None,
        }
    }

    pub fn fail(axiom_id: &str, witness: Vec<usize>, residual: Vector) -> Self {
        AxiomCheck {
            axiom_id: axiom_id.to_string(),
            status: CheckStatus::Fail,
            witness: Some(witness),
            residual: Some(residual),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
    pub overall: bool,
    /// Informational flags: recorded caveats and reported quantities that do
    /// not gate the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<AxiomCheck>) -> Self {
        let overall = checks.iter().all(AxiomCheck::passed);
        VerificationReport {
            checks,
            overall,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.notes.push(note);
        self
    }

    pub fn check(&self, axiom_id: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom_id == axiom_id)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    /// One human-readable line per check; derived from the report, never
    /// computed separately.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => out.push_str(&format!("  {:<28} pass\n", c.axiom_id)),
                CheckStatus::Fail => {
                    let w = c
                        .witness
                        .as_ref()
                        .map(|w| format!("{w:?}"))
                        .unwrap_or_default();
                    let r = c
                        .residual
                        .as_ref()
                        .map(|r| {
                            let coords: Vec<String> =
                                r.0.iter().map(|x| x.to_string()).collect();
                            format!("({})", coords.join(", "))
                        })
                        .unwrap_or_default();
                    out.push_str(&format!(
                        "  {:<28} FAIL  witness {w}  residual {r}\n",
                        c.axiom_id
                    ));
                }
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out.push_str(&format!(
            "  overall: {}\n",
            if self.overall { "pass" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> crate::error::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
