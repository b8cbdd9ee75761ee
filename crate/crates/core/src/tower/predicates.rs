use serde::{Deserialize, Serialize};

use super::fingerprint::FieldFingerprint;
use super::level::tower_level;
use super::spec::TowerSpec;
use crate::arith::numfield::{nf_roots, NFPoly};
use crate::arith::poly::UniPoly;

/// mu_n inside the whole tower L. For p > 3 only mu_2, mu_4 (d = -1) and
/// mu_6 (d = -3) occur; the cyclotomic Z_3-extension of Q(sqrt -3) holds every mu_{2*3^k}.
pub fn contains_mu(spec: &TowerSpec, n: u64) -> bool {
    if n == 0 {
        return false;
    }
    if n <= 2 {
        return true;
    }
    if spec.p == 3 && spec.d == -3 && spec.is_cyclotomic() {
        let mut m = n;
        if m % 2 == 0 {
            m /= 2;
        }
        while m % 3 == 0 {
            m /= 3;
        }
        return m == 1;
    }
    match n {
        4 => spec.d == -1,
        3 | 6 => spec.d == -3,
        _ => false,
    }
}

/// Largest n with mu_n in L, or None when there is no largest.
pub fn max_mu(spec: &TowerSpec) -> Option<u64> {
    if spec.p == 3 && spec.d == -3 && spec.is_cyclotomic() {
        return None;
    }
    Some(match spec.d {
        -1 => 4,
        -3 => 6,
        _ => 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlobalBound {
    Finite(u64),
    NoFiniteBound,
}

/// 163 n^2 with n the largest integer such that mu_n lies in L.
pub fn global_torsion_bound(spec: &TowerSpec) -> GlobalBound {
    match max_mu(spec) {
        Some(n) => GlobalBound::Finite(163 * n * n),
        None => GlobalBound::NoFiniteBound,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Admits {
    Yes,
    No,
    Unknown,
}

/// Can a field with fingerprint `f` lie inside L?
pub fn admits_subfield(spec: &TowerSpec, f: &FieldFingerprint) -> Admits {
    admits_subfield_with(spec, f, None).0
}

/// Largest level degree tried for an exact embedding test.
const EMBED_DEGREE_CAP: u64 = 18;

/// As `admits_subfield`, with an optional defining polynomial for an exact
/// embedding test, and the reason for the answer.
pub fn admits_subfield_with(spec: &TowerSpec, f: &FieldFingerprint, witness: Option<&UniPoly>) -> (Admits, String) {
    if f.degree == 1 {
        return (Admits::Yes, "Q lies in every field".into());
    }
    let mut rest = f.degree;
    let mut a = 0;
    while rest % spec.p == 0 {
        rest /= spec.p;
        a += 1;
    }
    if rest > 2 {
        return (Admits::No, format!("degree {} does not divide 2*{}^k", f.degree, spec.p));
    }
    let base = spec.base_ramified();
    for (&q, &e) in &f.ramification {
        if q == spec.p {
            continue;
        }
        if !base.contains(&q) {
            return (Admits::No, format!("{q} ramifies but L/K is unramified outside {}", spec.p));
        }
        if e > 2 {
            return (Admits::No, format!("{q} has ramification index {e} > 2 but L/K is unramified outside {}", spec.p));
        }
    }
    let Some(w) = witness else {
        return (Admits::Unknown, "no defining polynomial to test".into());
    };
    // every subfield of degree dividing 2p^a already lies in level a
    if spec.level_degree(a) > EMBED_DEGREE_CAP {
        return (Admits::Unknown, format!("level {a} exceeds the embedding degree cap"));
    }
    match tower_level(spec, a) {
        Ok(level) => match nf_roots(&level, &NFPoly::from_rational(&level, w)) {
            Ok(r) if !r.is_empty() => (Admits::Yes, format!("embeds in level {a}")),
            Ok(_) => (Admits::No, format!("does not embed in level {a}, which holds every subfield of its degree")),
            Err(e) => (Admits::Unknown, e.to_string()),
        },
        Err(e) => (Admits::Unknown, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_bounds() {
        assert_eq!(global_torsion_bound(&TowerSpec::cyclotomic(5, 7).unwrap()), GlobalBound::Finite(652));
        assert_eq!(global_torsion_bound(&TowerSpec::cyclotomic(-1, 5).unwrap()), GlobalBound::Finite(2608));
        assert_eq!(global_torsion_bound(&TowerSpec::cyclotomic(-3, 3).unwrap()), GlobalBound::NoFiniteBound);
    }

    #[test]
    fn fingerprints() {
        let s = TowerSpec::cyclotomic(5, 7).unwrap();
        assert_eq!(admits_subfield(&s, &FieldFingerprint::new(21, [(43, 21)])), Admits::No);
        let s5 = TowerSpec::cyclotomic(-2, 5).unwrap();
        assert_eq!(admits_subfield(&s5, &FieldFingerprint::new(5, [(11, 5)])), Admits::No);
        assert_eq!(admits_subfield(&s5, &FieldFingerprint::rationals()), Admits::Yes);
    }
}
