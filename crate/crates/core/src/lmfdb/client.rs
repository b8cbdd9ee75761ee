use std::sync::Mutex;
use std::thread::sleep;
use std::time::{Duration, Instant};

use super::api::parse_api_response;
use super::record::CurveRecord;
use crate::error::{Error, Result};

pub const DEFAULT_BASE_URL: &str = "https://www.lmfdb.org";
const MIN_INTERVAL: Duration = Duration::from_secs(1);
const PAGE: usize = 100;

/// Sequential, rate-limited client for the LMFDB REST API.
pub struct LmfdbClient {
    base: String,
    http: reqwest::blocking::Client,
    last: Mutex<Option<Instant>>,
}

impl LmfdbClient {
    /// Base URL from `LMFDB_BASE_URL`, else the public site.
    pub fn from_env() -> Result<Self> {
        let base = std::env::var("LMFDB_BASE_URL").unwrap_or_else(|_| DEFAULT_BASE_URL.to_string());
        Self::new(&base)
    }

    pub fn new(base: &str) -> Result<Self> {
        let http = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(30))
            .build()
            .map_err(|e| Error::Network(e.to_string()))?;
        Ok(LmfdbClient { base: base.trim_end_matches('/').to_string(), http, last: Mutex::new(None) })
    }

    fn get(&self, query: &str) -> Result<String> {
        let mut last = self.last.lock().expect("client lock");
        if let Some(t) = *last {
            let since = t.elapsed();
            if since < MIN_INTERVAL {
                sleep(MIN_INTERVAL - since);
            }
        }
        let url = format!("{}/api/ec_curvedata/?_format=json&{query}", self.base);
        let resp = self.http.get(&url).send();
        *last = Some(Instant::now());
        let resp = resp.map_err(|e| Error::Network(e.to_string()))?;
        if !resp.status().is_success() {
            return Err(Error::Network(format!("{url}: HTTP {}", resp.status())));
        }
        resp.text().map_err(|e| Error::Network(e.to_string()))
    }

    pub fn fetch_curve(&self, label: &str) -> Result<CurveRecord> {
        let key = if label.contains('.') { "lmfdb_label" } else { "Clabel" };
        let recs = parse_api_response(&self.get(&format!("{key}={label}"))?)?;
        recs.into_iter().next().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// All curves with the given isogeny degree, filtered to conductor <= bound.
    pub fn search_isogeny(&self, conductor_max: u64, degree: u64) -> Result<Vec<CurveRecord>> {
        let mut out = Vec::new();
        for page in 0.. {
            let q = format!("isogeny_degrees=cs{degree}&_sort=conductor&_offset={}", page * PAGE);
            let recs = parse_api_response(&self.get(&q)?)?;
            let n = recs.len();
            let mut past = false;
            for r in recs {
                if r.conductor <= conductor_max.into() {
                    out.push(r);
                } else {
                    past = true;
                }
            }
            if n < PAGE || past {
                break;
            }
        }
        Ok(out)
    }
}
