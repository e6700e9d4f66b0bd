//! Serialisable record types shared by the library and the command line.
//!
//! Certificates serialise with the edge list under `"F"` (sorted pairs) and
//! the witness vertex set under `"S"` (sorted), so reports are diff-stable.

use crate::graph::EdgeSet;
use crate::matching::DeficiencyWitness;
use crate::preclusion::{MpValue, PreclusionCertificate, UpperBounds};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    #[serde(rename = "F")]
    pub f: Vec<[usize; 2]>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub odd_components: usize,
}

impl From<&PreclusionCertificate> for CertificateRecord {
    fn from(c: &PreclusionCertificate) -> Self {
        CertificateRecord {
            f: c.f.iter().map(|(u, v)| [u, v]).collect(),
            s: c.witness.s.clone(),
            odd_components: c.witness.odd_components,
        }
    }
}

impl CertificateRecord {
    /// Rebuilds the in-memory certificate; fails on malformed pair lists.
    pub fn to_certificate(&self) -> Result<PreclusionCertificate, crate::graph::GraphError> {
        let f = EdgeSet::new(self.f.iter().map(|&[u, v]| (u, v)))?;
        let s = self.s.clone();
        Ok(PreclusionCertificate {
            f,
            witness: DeficiencyWitness {
                odd_components: self.odd_components,
                excess: self.odd_components.saturating_sub(s.len()),
                s,
            },
        })
    }
}

/// `mp` as JSON: a number, or the string `"not_precludable"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MpValueRecord {
    Finite(usize),
    Marker(String),
}

impl From<MpValue> for MpValueRecord {
    fn from(v: MpValue) -> Self {
        match v {
            MpValue::Finite(k) => MpValueRecord::Finite(k),
            MpValue::NotPrecludable => MpValueRecord::Marker("not_precludable".to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_xi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_two_vertex: Option<usize>,
}

impl From<UpperBounds> for BoundsRecord {
    fn from(b: UpperBounds) -> Self {
        BoundsRecord {
            even_delta: b.even_delta,
            odd_xi: b.odd_xi,
            odd_two_vertex: b.odd_two_vertex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    Exhaustive,
    Sampled,
    Constructive,
    WitnessAttainment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    Verified,
    Counterexample,
    SkippedOutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// graph6 encoding of the offending graph.
    pub graph6: String,
    /// What was observed, human readable.
    pub observed: String,
}

/// Outcome of one registered claim check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub mode: VerifyMode,
    pub params: BTreeMap<String, i64>,
    pub status: TheoremStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub stats: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem_id: &str, mode: VerifyMode) -> Self {
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            mode,
            params: BTreeMap::new(),
            status: TheoremStatus::Verified,
            seed: None,
            counterexample: None,
            stats: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn skipped(mut self, note: &str) -> Self {
        self.status = TheoremStatus::SkippedOutOfRange;
        self.notes.push(note.to_string());
        self
    }

    pub fn fail(&mut self, graph6: String, observed: String) {
        // Keep the first counterexample in scan order.
        if self.counterexample.is_none() {
            self.status = TheoremStatus::Counterexample;
            self.counterexample = Some(Counterexample { graph6, observed });
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn stat(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.stats.insert(key.to_string(), value.into());
    }

    pub fn is_verified(&self) -> bool {
        self.status == TheoremStatus::Verified
    }

    /// One CSV row: theorem_id, mode, params, status.
    pub fn csv_row(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let mode = match self.mode {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Sampled => "sampled",
            VerifyMode::Constructive => "constructive",
            VerifyMode::WitnessAttainment => "witness_attainment",
        };
        let status = match self.status {
            TheoremStatus::Verified => "verified",
            TheoremStatus::Counterexample => "counterexample",
            TheoremStatus::SkippedOutOfRange => "skipped_out_of_range",
        };
        format!("{},{},{},{}", self.theorem_id, mode, params, status)
    }
}
