use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use super::spec::{TowerKind, TowerSpec};
use crate::arith::field::FieldElem;
use crate::arith::numfield::{make_labeled, norm_poly, quadratic_field, Field, NFElement, NFPoly};
use crate::arith::poly::UniPoly;
use crate::arith::rat::{pow_mod, Rat};
use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("../../fixtures/towers.json");

#[derive(Deserialize, Clone, Debug)]
pub struct LevelFixture {
    pub d: i64,
    pub p: u64,
    pub kind: String,
    pub level: u32,
    /// a cubic (or degree-p^level) polynomial whose splitting field is the level
    #[serde(default)]
    pub cubic: Option<UniPoly>,
    pub poly: UniPoly,
}

#[derive(Deserialize)]
struct TowerFixtures {
    schema_version: u32,
    levels: Vec<LevelFixture>,
}

pub fn shipped_levels() -> &'static [LevelFixture] {
    static LEVELS: OnceLock<Vec<LevelFixture>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let t: TowerFixtures = serde_json::from_str(SHIPPED).expect("shipped tower fixtures");
        assert_eq!(t.schema_version, 1);
        t.levels
    })
}

fn primitive_root_prime_power(p: u64, m: u64) -> u64 {
    (2..m)
        .find(|&g| {
            g % p != 0
                && crate::arith::rat::factor_u64(p - 1).iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1)
                && (m == p || pow_mod(g, p - 1, p * p) != 1)
        })
        .expect("odd prime powers have primitive roots")
}

/// Minimal polynomial of a Gauss period generating the degree-p^n subfield of Q(zeta_{p^(n+1)}).
pub fn cyclotomic_p_subfield(p: u64, n: u32) -> UniPoly {
    if n == 0 {
        return UniPoly::x();
    }
    let m = p.pow(n + 1);
    let deg = p.pow(n);
    let g = primitive_root_prime_power(p, m);
    let h_gen = pow_mod(g, deg, m);
    let h: Vec<u64> = (0..p - 1).scan(1u64, |acc, _| {
        let cur = *acc;
        *acc = *acc * h_gen % m;
        Some(cur)
    }).collect();
    // product over cosets of (X - eta_c), coefficients in Z[C_m]
    let mut unit = vec![BigInt::zero(); m as usize];
    unit[0] = BigInt::from(1);
    let mut prod: Vec<Vec<BigInt>> = vec![unit];
    let mut c = 1u64;
    for _ in 0..deg {
        let eta: Vec<u64> = h.iter().map(|&x| x * c % m).collect();
        let mut next = vec![vec![BigInt::zero(); m as usize]; prod.len() + 1];
        for (k, coef) in prod.iter().enumerate() {
            for (i, v) in coef.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[k + 1][i] += v;
                for &e in &eta {
                    next[k][(i + e as usize) % m as usize] -= v;
                }
            }
        }
        prod = next;
        c = c * g % m;
    }
    // each coefficient is rational, so it equals its trace over phi(m)
    let phi = BigInt::from(m - m / p);
    let step = (m / p) as usize;
    let coeffs: Vec<Rat> = prod
        .iter()
        .map(|v| {
            let edge: BigInt = (1..p as usize).map(|j| &v[j * step]).sum();
            Rat::new(&phi * &v[0] - BigInt::from(step) * edge, phi.clone())
        })
        .collect();
    UniPoly::new(coeffs)
}

/// Defining polynomial of K F for F given by `g` of odd degree: the norm of g(x - sqrt d).
pub fn compositum_with_quadratic(d: i64, g: &UniPoly) -> Result<UniPoly> {
    let k = quadratic_field(d)?;
    let sd = NFElement::generator(&k);
    let gk = NFPoly::from_rational(&k, g).shift(&sd.neg());
    Ok(norm_poly(&k, &gk))
}

fn cache() -> &'static RwLock<HashMap<(TowerSpec, u32), Field>> {
    static CACHE: OnceLock<RwLock<HashMap<(TowerSpec, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Level n of the tower as an absolute field of degree 2 p^n.
pub fn tower_level(spec: &TowerSpec, n: u32) -> Result<Field> {
    let key = (spec.at_level(0), n);
    if let Some(f) = cache().read().expect("tower cache").get(&key) {
        return Ok(f.clone());
    }
    let f = build_level(spec, n)?;
    cache().write().expect("tower cache").insert(key, f.clone());
    Ok(f)
}

fn build_level(spec: &TowerSpec, n: u32) -> Result<Field> {
    if n == 0 {
        return quadratic_base(spec);
    }
    let label = Some(format!("Q(sqrt({}))_{}^{},{n}", spec.d, spec.kind.short_name(), spec.p));
    let poly = match &spec.kind {
        TowerKind::Cyclotomic => compositum_with_quadratic(spec.d, &cyclotomic_p_subfield(spec.p, n))?,
        TowerKind::Anticyclotomic => shipped_levels()
            .iter()
            .find(|l| l.kind == "anti" && l.d == spec.d && l.p == spec.p && l.level == n)
            .map(|l| l.poly.clone())
            .ok_or_else(|| Error::TowerLevelUnavailable(format!("no anticyclotomic fixture for d = {}, p = {}, level {n}", spec.d, spec.p)))?,
        TowerKind::Custom(polys) => polys
            .get(n as usize - 1)
            .cloned()
            .ok_or_else(|| Error::TowerLevelUnavailable(format!("custom tower has {} levels, asked for {n}", polys.len())))?,
    };
    make_labeled(&poly, label)
}

/// K = Q(sqrt d).
pub fn quadratic_base(spec: &TowerSpec) -> Result<Field> {
    quadratic_field(spec.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclo::cyclotomic_real_minpoly;

    #[test]
    fn gauss_periods() {
        // for p = 3, n = 1 the subfield is Q(zeta_9)^+
        let f = cyclotomic_p_subfield(3, 1);
        let g = cyclotomic_real_minpoly(9).unwrap();
        assert_eq!(f.deg(), 3);
        assert_eq!(f.discriminant(), g.discriminant());
        assert_eq!(cyclotomic_p_subfield(5, 1).deg(), 5);
        assert_eq!(cyclotomic_p_subfield(7, 1).deg(), 7);
    }
}
