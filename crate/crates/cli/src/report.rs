//! Machine-readable scenario reports.
//!
//! The `body` is fully deterministic for a fixed configuration and seed:
//! check records are sorted by id and all maps are ordered. Timing lives
//! outside the body so byte-comparisons of bodies are meaningful.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::Caps;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    /// The property held on every sampled instance; sampling is
    /// verification, not proof.
    SampledPass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// Self-contained statement of what was verified.
    pub statement: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::SampledPass)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Environment {
    pub field: String,
    pub group_order: usize,
    pub k_order: usize,
    pub rho_dim: usize,
    pub hecke_dimension: usize,
    pub double_cosets: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportBody {
    pub schema_version: u32,
    pub scenario: String,
    pub description: String,
    pub section: u32,
    pub seed: u64,
    pub caps: Caps,
    pub environment: Environment,
    pub checks: Vec<CheckRecord>,
    pub overall: Verdict,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
    pub per_check_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub body: ReportBody,
    pub timing: Timing,
}

impl Report {
    pub fn overall(checks: &[CheckRecord]) -> Verdict {
        if checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if checks.iter().any(|c| c.verdict == Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else if checks.iter().any(|c| c.verdict == Verdict::SampledPass) {
            Verdict::SampledPass
        } else {
            Verdict::Pass
        }
    }

    /// 0 all pass, 1 any fail, 2 inconclusive (3 is reserved for
    /// configuration/build errors before a report exists).
    pub fn exit_code(&self) -> i32 {
        match self.body.overall {
            Verdict::Pass | Verdict::SampledPass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("report bodies serialize")
    }
}

pub fn detail(v: impl Serialize) -> serde_json::Value {
    serde_json::to_value(v).expect("detail values serialize")
}
