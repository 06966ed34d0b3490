//! Machine-readable verification reports: an ordered list of named assertions
//! with pass/fail and an optional witness (first failing entry). The overall
//! verdict is the conjunction; metadata lives outside the assertion list so
//! reports are deterministic for identical inputs.

use crate::morphism::LinearMorphism;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    /// Short statement of the law being checked.
    pub law: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub inputs: Vec<InputDigest>,
    pub assertions: Vec<Assertion>,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputDigest {
    pub label: String,
    pub sha256: String,
}

impl Report {
    pub fn new(inputs: Vec<InputDigest>, assertions: Vec<Assertion>) -> Self {
        let verdict = if assertions.iter().all(|a| a.pass) {
            "pass".to_string()
        } else {
            "fail".to_string()
        };
        Report {
            tool: ToolInfo {
                name: env!("CARGO_PKG_NAME").to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            inputs,
            assertions,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let status = if a.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status}  {:<28} {}\n", a.name, a.law));
            if let Some(w) = &a.witness {
                out.push_str(&format!(
                    "      witness: entry ({}, {}) lhs={} rhs={}\n",
                    w.row, w.col, w.lhs, w.rhs
                ));
            }
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// Accumulates assertions; checking never aborts on failure so a report
/// always covers every independent law.
#[derive(Debug, Default)]
pub struct Checker {
    assertions: Vec<Assertion>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Asserts exact equality of two morphisms.
    pub fn eq(
        &mut self,
        name: impl Into<String>,
        law: impl Into<String>,
        lhs: &LinearMorphism,
        rhs: &LinearMorphism,
    ) -> bool {
        let (pass, witness) = match lhs.first_difference(rhs) {
            None => (true, None),
            Some((row, col, l, r)) => (
                false,
                Some(Witness {
                    row,
                    col,
                    lhs: l,
                    rhs: r,
                }),
            ),
        };
        self.assertions.push(Assertion {
            name: name.into(),
            law: law.into(),
            pass,
            witness,
        });
        pass
    }

    pub fn claim(&mut self, name: impl Into<String>, law: impl Into<String>, pass: bool) -> bool {
        self.assertions.push(Assertion {
            name: name.into(),
            law: law.into(),
            pass,
            witness: None,
        });
        pass
    }

    pub fn extend(&mut self, other: Vec<Assertion>) {
        self.assertions.extend(other);
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn first_failure(&self) -> Option<&Assertion> {
        self.assertions.iter().find(|a| !a.pass)
    }

    pub fn into_assertions(self) -> Vec<Assertion> {
        self.assertions
    }
}
