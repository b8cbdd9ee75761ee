use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::factor::is_irreducible;
use crate::arith::poly::UniPoly;
use crate::arith::rat::{is_prime, is_squarefree};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TowerKind {
    Cyclotomic,
    Anticyclotomic,
    /// level_polys[k] defines level k + 1
    Custom(Vec<UniPoly>),
}

impl TowerKind {
    pub fn short_name(&self) -> &'static str {
        match self {
            TowerKind::Cyclotomic => "cyc",
            TowerKind::Anticyclotomic => "anti",
            TowerKind::Custom(_) => "custom",
        }
    }
}

/// A Z_p-extension L of K = Q(sqrt d), viewed at a finite level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerSpec {
    pub d: i64,
    pub p: u64,
    pub kind: TowerKind,
    pub level: u32,
}

impl TowerSpec {
    pub fn new(d: i64, p: u64, kind: TowerKind, level: u32) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTower(m));
        if d == 0 || d == 1 || !is_squarefree(d) {
            return bad(format!("d = {d} must be squarefree and not 0 or 1"));
        }
        if p == 2 || !is_prime(p) {
            return bad(format!("p = {p} must be an odd prime"));
        }
        match &kind {
            TowerKind::Anticyclotomic if d > 0 => return bad("anticyclotomic towers need imaginary K".into()),
            TowerKind::Custom(polys) => {
                for (k, f) in polys.iter().enumerate() {
                    let want = 2 * p.pow(k as u32 + 1);
                    if f.deg() as u64 != want || !f.is_monic() || !is_irreducible(f) {
                        return bad(format!("custom level {} must be monic irreducible of degree {want}", k + 1));
                    }
                }
            }
            _ => {}
        }
        Ok(TowerSpec { d, p, kind, level })
    }

    pub fn cyclotomic(d: i64, p: u64) -> Result<Self> {
        Self::new(d, p, TowerKind::Cyclotomic, 0)
    }

    pub fn anticyclotomic(d: i64, p: u64) -> Result<Self> {
        Self::new(d, p, TowerKind::Anticyclotomic, 0)
    }

    pub fn at_level(&self, level: u32) -> Self {
        TowerSpec { level, ..self.clone() }
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.kind == TowerKind::Cyclotomic
    }

    pub fn is_anticyclotomic(&self) -> bool {
        self.kind == TowerKind::Anticyclotomic
    }

    /// Degree of the level field over Q.
    pub fn level_degree(&self, n: u32) -> u64 {
        2 * self.p.pow(n)
    }

    /// Field discriminant of K.
    pub fn base_discriminant(&self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            self.d
        } else {
            4 * self.d
        }
    }

    /// Primes ramified in K.
    pub fn base_ramified(&self) -> Vec<u64> {
        crate::arith::rat::factor_u64(self.base_discriminant().unsigned_abs()).into_iter().map(|(q, _)| q).collect()
    }
}

impl fmt::Display for TowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))_{}^{} level {}", self.d, self.kind.short_name(), self.p, self.level)
    }
}
