//! Constant group lists and the candidate sets the rule engine starts from.

use serde::{Deserialize, Serialize};

use crate::curve::model::GroupShape;
use crate::tower::predicates::{contains_mu, max_mu};
use crate::tower::spec::TowerSpec;

/// Orders of cyclic torsion points over abelian extensions of Q that are not
/// covered by 1..=19.
const SPORADIC_CYCLIC: [u64; 7] = [21, 25, 27, 37, 43, 67, 163];

fn shape(a: u64, b: u64) -> GroupShape {
    GroupShape::new(a, b).expect("valid shape")
}

/// Cyclic orders a rational cyclic isogeny can have.
pub fn isogeny_orders() -> Vec<u64> {
    (1..=19).chain(SPORADIC_CYCLIC).collect()
}

/// Torsion of E/Q over an abelian Galois extension of Q.
pub fn ambient_list() -> Vec<GroupShape> {
    let mut out: Vec<GroupShape> = isogeny_orders().into_iter().map(GroupShape::cyclic).collect();
    out.extend((1..=9).map(|n| shape(2, 2 * n)));
    out.extend((1..=3).map(|n| shape(3, 3 * n)));
    out.extend((1..=4).map(|n| shape(4, 4 * n)));
    out.extend([shape(5, 5), shape(6, 6), shape(8, 8)]);
    out.sort();
    out
}

/// How a quadratic field K = Q(sqrt d) sits with respect to the roots of unity
/// the lists depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseClass {
    Generic,
    Minus1,
    Minus3,
    Special(i64),
}

impl BaseClass {
    pub fn of(d: i64) -> Self {
        match d {
            -1 => BaseClass::Minus1,
            -3 => BaseClass::Minus3,
            d => BaseClass::Special(d),
        }
    }

    /// A field of this class, used where a concrete discriminant is needed.
    pub fn representative(&self) -> i64 {
        match self {
            BaseClass::Generic => -2,
            BaseClass::Minus1 => -1,
            BaseClass::Minus3 => -3,
            BaseClass::Special(d) => *d,
        }
    }

    pub fn concrete_d(&self) -> Option<i64> {
        match self {
            BaseClass::Generic => None,
            c => Some(c.representative()),
        }
    }
}

/// Torsion of E/Q base-changed to a quadratic field of the given class.
/// Z/15 only occurs over Q(sqrt 5) and Q(sqrt -15).
pub fn najman_list(class: BaseClass) -> Vec<GroupShape> {
    let d = class.concrete_d();
    let mut out: Vec<GroupShape> = (1..=10).chain([12, 16]).map(GroupShape::cyclic).collect();
    if d.is_none() || d == Some(5) || d == Some(-15) {
        out.push(GroupShape::cyclic(15));
    }
    out.extend((1..=6).map(|n| shape(2, 2 * n)));
    if d == Some(-3) {
        out.extend([shape(3, 3), shape(3, 6)]);
    }
    if d == Some(-1) {
        out.push(shape(4, 4));
    }
    out.sort();
    out
}

/// Shapes (a, a m) with mu_a inside the tower and m a rational isogeny order.
/// Starting set for towers that are not abelian over Q.
pub fn generated_candidates(spec: &TowerSpec) -> Vec<GroupShape> {
    let amax = max_mu(spec).unwrap_or(6);
    let mut out = vec![];
    for a in (1..=amax).filter(|&a| contains_mu(spec, a)) {
        for m in isogeny_orders() {
            out.push(shape(a, a * m));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambient_counts() {
        let l = ambient_list();
        assert_eq!(l.len(), 45);
        assert_eq!(l.iter().filter(|s| s.a() == 1).count(), 26);
        assert!(l.contains(&GroupShape::cyclic(163)));
        assert!(l.contains(&shape(8, 8)));
        assert!(!l.contains(&shape(8, 16)));
    }

    #[test]
    fn najman_sizes() {
        assert_eq!(najman_list(BaseClass::Generic).len(), 19);
        assert_eq!(najman_list(BaseClass::Minus1).len(), 19);
        assert_eq!(najman_list(BaseClass::Minus3).len(), 20);
        assert_eq!(najman_list(BaseClass::Special(5)).len(), 19);
        assert_eq!(najman_list(BaseClass::Special(-2)).len(), 18);
    }
}
