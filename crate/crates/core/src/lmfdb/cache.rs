use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::record::CurveRecord;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

const SHIPPED: &str = include_str!("../../fixtures/curves.json");

/// A versioned collection of curve records.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub schema_version: u32,
    pub records: Vec<CurveRecord>,
}

#[derive(Deserialize)]
struct VersionProbe {
    schema_version: u32,
}

impl Corpus {
    pub fn empty() -> Self {
        Corpus { schema_version: SCHEMA_VERSION, records: Vec::new() }
    }

    /// The fixture corpus compiled into the library.
    pub fn shipped() -> Self {
        Self::from_json(SHIPPED).expect("shipped fixtures are valid")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let probe: VersionProbe = serde_json::from_str(s)?;
        if probe.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaMismatch { expected: SCHEMA_VERSION, found: probe.schema_version });
        }
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn get(&self, label: &str) -> Option<&CurveRecord> {
        self.records.iter().find(|r| r.label == label)
    }

    /// Inserts or replaces by label.
    pub fn upsert(&mut self, rec: CurveRecord) {
        match self.records.iter_mut().find(|r| r.label == rec.label) {
            Some(slot) => *slot = rec,
            None => self.records.push(rec),
        }
    }

    /// Records whose curve has a rational cyclic isogeny of the given degree
    /// and conductor at most `conductor_max`, ordered by (conductor, label).
    pub fn search_isogeny(&self, conductor_max: u64, degree: u64) -> Vec<String> {
        let mut hits: Vec<&CurveRecord> = self
            .records
            .iter()
            .filter(|r| r.has_isogeny(degree) && r.conductor <= conductor_max.into())
            .collect();
        hits.sort_by(|a, b| a.conductor.cmp(&b.conductor).then_with(|| a.label.cmp(&b.label)));
        hits.into_iter().map(|r| r.label.clone()).collect()
    }
}

pub fn cache_store(corpus: &Corpus, path: &Path) -> Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, corpus.to_json())?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<Corpus> {
    Corpus::from_json(&fs::read_to_string(path)?)
}
