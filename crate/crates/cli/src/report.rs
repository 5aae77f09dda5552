//! Machine-readable report documents.
//!
//! Field order is fixed by the struct layout and `params` is a sorted map,
//! so identical inputs serialize to byte-identical documents apart from the
//! `timing_ms` field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sgp_core::VerificationReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckEntry>,
    pub timing_ms: u64,
    pub schema_version: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            timing_ms: 0,
            schema_version: SCHEMA_VERSION,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<String>) -> &mut Self {
        self.checks.push(CheckEntry {
            name: name.to_string(),
            pass,
            witness,
        });
        self
    }

    /// Informational entry: always passing, value in the witness slot.
    pub fn value(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.check(name, true, Some(value.to_string()))
    }

    pub fn absorb(&mut self, report: &VerificationReport) -> &mut Self {
        for c in &report.checks {
            self.checks.push(CheckEntry {
                name: c.name.clone(),
                pass: c.pass,
                witness: c.witness.clone(),
            });
        }
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Checks as CSV lines under a `name,pass,witness` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,pass,witness\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{}\n",
                c.name,
                c.pass,
                c.witness.as_deref().unwrap_or("")
            ));
        }
        out
    }
}
