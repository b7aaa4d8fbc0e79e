//! Report schema: one JSON object per scenario run, stable under re-runs
//! with the same seed (the timing field is the only nondeterministic one).

use serde::{Deserialize, Serialize};

use osculant_core::osculation::OscCertificate;
use osculant_core::variety::ProjPoint;

pub const SCHEMA_VERSION: u32 = 1;

/// Overall verdict of a scenario run, mapped to the process exit code:
/// pass = 0, negative = 1, degenerate = 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunVerdict {
    Pass,
    Negative,
    Degenerate,
}

impl RunVerdict {
    pub fn exit_code(self) -> i32 {
        match self {
            RunVerdict::Pass => 0,
            RunVerdict::Negative => 1,
            RunVerdict::Degenerate => 2,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub scenario: serde_json::Value,
    pub seed: u64,
    pub results: serde_json::Value,
    pub verdict: RunVerdict,
    pub timing_ms: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// Serialization with the timing field pinned to zero, for determinism
    /// comparisons and golden tests.
    pub fn stable_json(&self) -> String {
        let mut clone = self.clone();
        clone.timing_ms = 0;
        serde_json::to_string_pretty(&clone).expect("report serialization")
    }
}

/// JSON image of a point: primitive integer coordinates rendered as decimal
/// strings (they routinely exceed 64 bits).
pub fn point_json(p: &ProjPoint) -> Vec<String> {
    p.coords().iter().map(|c| c.numer().to_string()).collect()
}

/// JSON image of an osculating certificate, field order fixed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub variety: String,
    pub k: u32,
    pub generic_dim: usize,
    pub expected_dim: usize,
    pub defect: i64,
    pub candidate: Option<Vec<String>>,
    pub mode: String,
    pub verdict: String,
}

impl CertificateJson {
    pub fn from_certificate(c: &OscCertificate) -> Self {
        CertificateJson {
            variety: c.variety.clone(),
            k: c.k,
            generic_dim: c.generic_dim,
            expected_dim: c.expected_dim,
            defect: c.defect,
            candidate: c.candidate.as_ref().map(point_json),
            mode: c.mode.as_str().to_string(),
            verdict: c.verdict.as_str().to_string(),
        }
    }
}
