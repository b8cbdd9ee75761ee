use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Degree of a number field together with its ramified primes and the
/// largest ramification index seen above each.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FieldFingerprint {
    pub degree: u64,
    pub ramification: BTreeMap<u64, u32>,
}

impl FieldFingerprint {
    pub fn new(degree: u64, ramification: impl IntoIterator<Item = (u64, u32)>) -> Self {
        FieldFingerprint { degree, ramification: ramification.into_iter().collect() }
    }

    /// Fingerprint with ramified primes only (index unknown, recorded as 0).
    pub fn with_primes(degree: u64, primes: &[u64]) -> Self {
        Self::new(degree, primes.iter().map(|&p| (p, 0)))
    }

    pub fn rationals() -> Self {
        Self::new(1, [])
    }

    pub fn ramified_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.ramification.keys().copied()
    }
}

impl fmt::Display for FieldFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.ramification.keys().map(|p| p.to_string()).collect();
        write!(f, "({}, {{{}}})", self.degree, ps.join(","))
    }
}
