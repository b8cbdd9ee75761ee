use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::rat::{fmt_rat, parse_rat, Rat};
use crate::curve::model::{EllipticCurveQ, GroupShape};
use crate::error::{Error, Result};
use crate::tower::fingerprint::FieldFingerprint;

/// Mazur's list of rational torsion groups.
pub fn mazur_list() -> Vec<GroupShape> {
    let mut v: Vec<GroupShape> = (1..=10).chain([12]).map(GroupShape::cyclic).collect();
    v.extend((1..=4).map(|n| GroupShape::new(2, 2 * n).unwrap()));
    v
}

/// Cremona (`50b1`) or LMFDB (`50.b3`) curve label.
pub fn is_valid_label(s: &str) -> bool {
    let digits = s.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 || s.starts_with('0') {
        return false;
    }
    let rest = s[digits..].strip_prefix('.').unwrap_or(&s[digits..]);
    let letters = rest.bytes().take_while(u8::is_ascii_lowercase).count();
    let tail = &rest[letters..];
    letters > 0 && !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveRecord {
    pub label: String,
    pub a_invariants: [Rat; 5],
    pub j: Rat,
    pub torsion_q: GroupShape,
    pub cyclic_isogeny_degrees: BTreeSet<u64>,
    pub conductor: BigInt,
    /// x-coordinate fields of the kernel points of the isogenies, by degree
    pub kernel_fields: BTreeMap<u64, Vec<FieldFingerprint>>,
    pub two_division_field: Option<FieldFingerprint>,
}

impl CurveRecord {
    pub fn curve(&self) -> EllipticCurveQ {
        EllipticCurveQ::new(self.a_invariants.clone()).expect("validated record").with_label(self.label.clone())
    }

    pub fn has_isogeny(&self, n: u64) -> bool {
        self.cyclic_isogeny_degrees.contains(&n)
    }

    /// Checks nonsingularity, label syntax, Mazur membership and the stored j-invariant.
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Error::InvalidRecord { label: self.label.clone(), reason: reason.into() };
        if !is_valid_label(&self.label) {
            return Err(bad("label syntax"));
        }
        let e = EllipticCurveQ::new(self.a_invariants.clone()).map_err(|_| bad("singular model"))?;
        if e.j_invariant() != self.j {
            return Err(bad("j-invariant does not match coefficients"));
        }
        if !mazur_list().contains(&self.torsion_q) {
            return Err(bad("torsion outside Mazur's list"));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawRecord {
    label: String,
    a_invariants: Vec<String>,
    j: String,
    torsion_q: GroupShape,
    cyclic_isogeny_degrees: Vec<u64>,
    conductor: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    kernel_fields: BTreeMap<u64, Vec<FieldFingerprint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    two_division_field: Option<FieldFingerprint>,
}

impl TryFrom<RawRecord> for CurveRecord {
    type Error = Error;
    fn try_from(r: RawRecord) -> Result<Self> {
        let bad = |reason: String| Error::InvalidRecord { label: r.label.clone(), reason };
        let a: Vec<Rat> = r.a_invariants.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
        let a_invariants: [Rat; 5] = a.try_into().map_err(|_| bad("expected 5 a-invariants".into()))?;
        let conductor = r.conductor.parse::<BigInt>().map_err(|e| bad(format!("conductor: {e}")))?;
        let rec = CurveRecord {
            j: parse_rat(&r.j)?,
            a_invariants,
            torsion_q: r.torsion_q,
            cyclic_isogeny_degrees: r.cyclic_isogeny_degrees.into_iter().collect(),
            conductor,
            kernel_fields: r.kernel_fields,
            two_division_field: r.two_division_field,
            label: r.label,
        };
        rec.validate()?;
        Ok(rec)
    }
}

impl From<&CurveRecord> for RawRecord {
    fn from(r: &CurveRecord) -> Self {
        RawRecord {
            label: r.label.clone(),
            a_invariants: r.a_invariants.iter().map(fmt_rat).collect(),
            j: fmt_rat(&r.j),
            torsion_q: r.torsion_q,
            cyclic_isogeny_degrees: r.cyclic_isogeny_degrees.iter().copied().collect(),
            conductor: r.conductor.to_string(),
            kernel_fields: r.kernel_fields.clone(),
            two_division_field: r.two_division_field.clone(),
        }
    }
}

impl Serialize for CurveRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRecord::deserialize(d)?;
        CurveRecord::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        for l in ["50b1", "1849a1", "26569a1", "50.b3", "11.a2"] {
            assert!(is_valid_label(l), "{l}");
        }
        for l in ["", "b1", "50b", "050b1", "50B1", "50.b", "50b1x"] {
            assert!(!is_valid_label(l), "{l}");
        }
    }

    #[test]
    fn mazur() {
        assert_eq!(mazur_list().len(), 15);
    }
}
