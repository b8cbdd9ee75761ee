//! Replayable classification certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::rules::{Conclusion, RuleId};
use super::{ClassificationResult, ClassifyOptions};
use crate::curve::model::GroupShape;
use crate::error::{Error, Result};
use crate::tower::spec::TowerSpec;

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub shape: GroupShape,
    pub rule: RuleId,
    /// sha256 of the canonical JSON of the rule inputs
    pub inputs: String,
    pub conclusion: Conclusion,
}

/// Torsion computed directly, over K and over tower levels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facts {
    pub torsion_k: Option<GroupShape>,
    pub level_torsion: BTreeMap<u32, GroupShape>,
    pub unavailable: BTreeMap<u32, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub curve: [String; 5],
    pub label: Option<String>,
    pub spec: TowerSpec,
    pub options: ClassifyOptions,
    pub candidates: Vec<GroupShape>,
    pub facts: Facts,
    pub steps: Vec<Step>,
    #[serde(rename = "final")]
    pub result: ClassificationResult,
}

/// Compact JSON with object keys in sorted order.
pub fn canonical_json<T: Serialize>(v: &T) -> String {
    let value: Value = serde_json::to_value(v).expect("serializable");
    value.to_string()
}

pub fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

impl Certificate {
    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    pub fn to_json_pretty(&self) -> String {
        let value: Value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: Certificate = serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))?;
        if c.version != CERTIFICATE_VERSION {
            return Err(Error::SchemaMismatch { found: c.version, expected: CERTIFICATE_VERSION });
        }
        Ok(c)
    }
}

/// First difference between a certificate and its fresh replay.
pub(crate) fn diff(old: &Certificate, new: &Certificate) -> std::result::Result<(), String> {
    if old.candidates != new.candidates {
        return Err("candidate list differs from the replay".into());
    }
    if old.facts != new.facts {
        return Err(format!(
            "facts differ: certificate has {}, replay has {}",
            canonical_json(&old.facts),
            canonical_json(&new.facts)
        ));
    }
    for (i, (a, b)) in old.steps.iter().zip(&new.steps).enumerate() {
        if a != b {
            let what = if a.shape != b.shape || a.rule != b.rule {
                "rule or shape"
            } else if a.inputs != b.inputs {
                "inputs digest"
            } else {
                "conclusion"
            };
            return Err(format!("step {i} ({} on [{},{}]): {what} does not reproduce", a.rule, a.shape.a(), a.shape.b()));
        }
    }
    if old.steps.len() != new.steps.len() {
        return Err(format!("certificate has {} steps, replay has {}", old.steps.len(), new.steps.len()));
    }
    if old.result != new.result {
        return Err("final result does not reproduce".into());
    }
    Ok(())
}
