//! Curve records: shipped fixtures, an on-disk cache, and (with the
//! `network` feature) the LMFDB REST API.

pub mod api;
pub mod cache;
#[cfg(feature = "network")]
pub mod client;
pub mod record;

use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

pub use api::{parse_api_record, parse_api_response};
pub use cache::{cache_load, cache_store, Corpus, SCHEMA_VERSION};
pub use record::{is_valid_label, mazur_list, CurveRecord};

use crate::error::{Error, Result};

/// Record lookup: shipped fixtures overlaid by a cache file, falling back to
/// the network when allowed.
pub struct Gateway {
    corpus: RwLock<Corpus>,
    cache_path: Option<PathBuf>,
    offline: bool,
    writer: Mutex<()>,
    #[cfg(feature = "network")]
    client: Mutex<Option<client::LmfdbClient>>,
}

impl Gateway {
    /// Shipped fixtures only, no network.
    pub fn offline() -> Self {
        Self::with_corpus(Corpus::shipped(), None, true)
    }

    pub fn open(cache_path: Option<&Path>, offline: bool) -> Result<Self> {
        let mut corpus = Corpus::shipped();
        if let Some(p) = cache_path.filter(|p| p.exists()) {
            for r in cache_load(p)?.records {
                corpus.upsert(r);
            }
        }
        Ok(Self::with_corpus(corpus, cache_path.map(Path::to_path_buf), offline))
    }

    fn with_corpus(corpus: Corpus, cache_path: Option<PathBuf>, offline: bool) -> Self {
        Gateway {
            corpus: RwLock::new(corpus),
            cache_path,
            offline,
            writer: Mutex::new(()),
            #[cfg(feature = "network")]
            client: Mutex::new(None),
        }
    }

    pub fn corpus(&self) -> Corpus {
        self.corpus.read().expect("corpus lock").clone()
    }

    pub fn lookup(&self, label: &str) -> Option<CurveRecord> {
        self.corpus.read().expect("corpus lock").get(label).cloned()
    }

    pub fn fetch_curve(&self, label: &str) -> Result<CurveRecord> {
        if !is_valid_label(label) {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        if let Some(r) = self.lookup(label) {
            return Ok(r);
        }
        let rec = self.remote_fetch(label)?;
        self.remember(vec![rec.clone()])?;
        Ok(rec)
    }

    pub fn search_isogeny(&self, conductor_max: u64, degree: u64) -> Result<Vec<String>> {
        if !self.offline {
            if let Some(recs) = self.remote_search(conductor_max, degree)? {
                self.remember(recs)?;
            }
        }
        Ok(self.corpus.read().expect("corpus lock").search_isogeny(conductor_max, degree))
    }

    fn remember(&self, recs: Vec<CurveRecord>) -> Result<()> {
        let _w = self.writer.lock().expect("writer lock");
        let snapshot = {
            let mut c = self.corpus.write().expect("corpus lock");
            for r in recs {
                c.upsert(r);
            }
            c.clone()
        };
        if let Some(p) = &self.cache_path {
            cache_store(&snapshot, p)?;
        }
        Ok(())
    }

    #[cfg(feature = "network")]
    fn with_client<T>(&self, f: impl FnOnce(&client::LmfdbClient) -> Result<T>) -> Result<T> {
        let mut slot = self.client.lock().expect("client lock");
        if slot.is_none() {
            *slot = Some(client::LmfdbClient::from_env()?);
        }
        f(slot.as_ref().unwrap())
    }

    #[cfg(feature = "network")]
    fn remote_fetch(&self, label: &str) -> Result<CurveRecord> {
        if self.offline {
            return Err(Error::OfflineMiss(label.to_string()));
        }
        self.with_client(|c| c.fetch_curve(label))
    }

    #[cfg(not(feature = "network"))]
    fn remote_fetch(&self, label: &str) -> Result<CurveRecord> {
        Err(Error::OfflineMiss(label.to_string()))
    }

    #[cfg(feature = "network")]
    fn remote_search(&self, conductor_max: u64, degree: u64) -> Result<Option<Vec<CurveRecord>>> {
        self.with_client(|c| c.search_isogeny(conductor_max, degree)).map(Some)
    }

    #[cfg(not(feature = "network"))]
    fn remote_search(&self, _conductor_max: u64, _degree: u64) -> Result<Option<Vec<CurveRecord>>> {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offline_lookup() {
        let g = Gateway::offline();
        assert!(g.fetch_curve("50b1").unwrap().has_isogeny(15));
        assert!(g.fetch_curve("1849a1").unwrap().has_isogeny(43));
        assert!(matches!(g.fetch_curve("9999z9"), Err(Error::OfflineMiss(_))));
        assert!(matches!(g.fetch_curve("nonsense"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn search() {
        let g = Gateway::offline();
        assert!(!g.search_isogeny(1000, 25).unwrap().is_empty());
        let elevens = g.search_isogeny(200, 11).unwrap();
        for l in ["121a1", "121b1", "121c1"] {
            assert!(elevens.iter().any(|x| x == l));
        }
        assert!(g.search_isogeny(10, 163).unwrap().is_empty());
    }
}
