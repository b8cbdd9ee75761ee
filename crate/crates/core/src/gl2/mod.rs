//! GL_2(Z/NZ) for small N with subgroups as explicit element sets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::arith::rat::factor_u64;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GL2Element {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl GL2Element {
    pub fn new(n: u64, a: u64, b: u64, c: u64, d: u64) -> Option<Self> {
        let m = GL2Element { n, a: a % n, b: b % n, c: c % n, d: d % n };
        m.is_invertible().then_some(m)
    }

    pub fn identity(n: u64) -> Self {
        GL2Element { n, a: 1 % n, b: 0, c: 0, d: 1 % n }
    }

    pub fn det(&self) -> u64 {
        (self.a * self.d + self.n * self.n - self.b * self.c % self.n) % self.n
    }

    fn is_invertible(&self) -> bool {
        num_integer::gcd(self.det(), self.n) == 1
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        GL2Element {
            n,
            a: (self.a * o.a + self.b * o.c) % n,
            b: (self.a * o.b + self.b * o.d) % n,
            c: (self.c * o.a + self.d * o.c) % n,
            d: (self.c * o.b + self.d * o.d) % n,
        }
    }

    /// Action on column vectors.
    pub fn apply(&self, v: (u64, u64)) -> (u64, u64) {
        let n = self.n;
        ((self.a * v.0 + self.b * v.1) % n, (self.c * v.0 + self.d * v.1) % n)
    }
}

impl fmt::Display for GL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]] mod {}", self.a, self.b, self.c, self.d, self.n)
    }
}

/// |GL_2(Z/NZ)| = N^4 prod_{p | N} (1 - 1/p)(1 - 1/p^2).
pub fn gl2_order(n: u64) -> u64 {
    let mut order = n.pow(4);
    for (p, _) in factor_u64(n) {
        order = order / p * (p - 1);
        order = order / (p * p) * (p * p - 1);
    }
    order
}

/// The full group with its multiplication table; subgroups are bitmasks.
pub struct GL2Group {
    pub n: u64,
    pub elements: Vec<GL2Element>,
    table: Vec<Vec<u8>>,
    index: HashMap<GL2Element, usize>,
}

impl GL2Group {
    pub fn new(n: u64) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::EnumerationCap(n));
        }
        let mut elements = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if let Some(m) = GL2Element::new(n, a, b, c, d) {
                            elements.push(m);
                        }
                    }
                }
            }
        }
        let index: HashMap<GL2Element, usize> = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let table = elements.iter().map(|x| elements.iter().map(|y| index[&x.mul(y)] as u8).collect()).collect();
        Ok(GL2Group { n, elements, table, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn closure(&self, mut mask: u128) -> u128 {
        mask |= 1 << self.index[&GL2Element::identity(self.n)];
        loop {
            let mut next = mask;
            for i in bits(mask) {
                for j in bits(mask) {
                    next |= 1 << self.table[i][j];
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    fn to_subgroup(&self, mask: u128) -> GL2Subgroup {
        GL2Subgroup { n: self.n, elements: bits(mask).map(|i| self.elements[i]).collect() }
    }

    /// Every subgroup, by joining single elements onto known subgroups.
    fn all_masks(&self) -> Vec<u128> {
        let mut seen: BTreeSet<u128> = BTreeSet::new();
        let trivial = self.closure(0);
        let mut frontier = vec![trivial];
        seen.insert(trivial);
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h & (1 << g) != 0 {
                    continue;
                }
                let k = self.closure(h | (1 << g));
                if seen.insert(k) {
                    frontier.push(k);
                }
            }
        }
        let mut v: Vec<u128> = seen.into_iter().collect();
        v.sort_by_key(|m| (m.count_ones(), *m));
        v
    }

    fn inverse(&self, i: usize) -> usize {
        let e = self.index[&GL2Element::identity(self.n)];
        (0..self.order()).find(|&j| self.table[i][j] as usize == e).expect("group element")
    }

    fn conjugate(&self, mask: u128, g: usize) -> u128 {
        let gi = self.inverse(g);
        bits(mask).fold(0u128, |acc, h| acc | 1 << self.table[self.table[g][h] as usize][gi])
    }

    /// Least conjugate bitmask, a canonical label for the conjugacy class.
    fn canonical(&self, mask: u128) -> u128 {
        (0..self.order()).map(|g| self.conjugate(mask, g)).min().expect("nonempty group")
    }
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| mask & (1 << i) != 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GL2Subgroup {
    pub n: u64,
    pub elements: Vec<GL2Element>,
}

impl GL2Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GL2Element) -> bool {
        self.elements.contains(g)
    }
}

/// All subgroups of GL_2(Z/NZ), ordered by (order, element indices).
pub fn enumerate_subgroups(n: u64) -> Result<Vec<GL2Subgroup>> {
    let g = GL2Group::new(n)?;
    Ok(g.all_masks().into_iter().map(|m| g.to_subgroup(m)).collect())
}

/// One canonical representative per conjugacy class.
pub fn subgroup_classes(n: u64) -> Result<Vec<GL2Subgroup>> {
    let g = GL2Group::new(n)?;
    let reps: BTreeSet<(u32, u128)> = g.all_masks().into_iter().map(|m| {
        let c = g.canonical(m);
        (c.count_ones(), c)
    }).collect();
    Ok(reps.into_iter().map(|(_, m)| g.to_subgroup(m)).collect())
}

pub fn is_abelian(h: &GL2Subgroup) -> bool {
    h.elements.iter().all(|x| h.elements.iter().all(|y| x.mul(y) == y.mul(x)))
}

/// det: H -> (Z/NZ)^* is onto.
pub fn has_surjective_det(h: &GL2Subgroup) -> bool {
    let dets: BTreeSet<u64> = h.elements.iter().map(|g| g.det()).collect();
    let units = (1..h.n).filter(|u| num_integer::gcd(*u, h.n) == 1).count();
    dets.len() == units
}

/// Involutions of determinant -1 fixing a point of exact order N. Complex
/// conjugation acts this way on E[N] for any E over Q, since E(R) contains a circle.
pub fn complex_conjugations(h: &GL2Subgroup) -> Vec<GL2Element> {
    let n = h.n;
    let id = GL2Element::identity(n);
    h.elements
        .iter()
        .filter(|g| g.det() == n - 1 && g.mul(g) == id)
        .filter(|g| (0..n).any(|x| (0..n).any(|y| additive_order((x, y), n) == n && g.apply((x, y)) == (x, y))))
        .cloned()
        .collect()
}

/// Necessary conditions for H to be the mod-N image of some E over Q.
pub fn is_admissible_image(h: &GL2Subgroup) -> bool {
    has_surjective_det(h) && !complex_conjugations(h).is_empty()
}

fn additive_order(v: (u64, u64), n: u64) -> u64 {
    (1..=n).find(|k| k * v.0 % n == 0 && k * v.1 % n == 0).unwrap()
}

/// Cyclic subgroups of order m of (Z/NZ)^2 mapped into themselves by every
/// element of H, each listed as its sorted element set.
pub fn fixed_cyclic_subgroups(h: &GL2Subgroup, m: u64) -> Vec<Vec<(u64, u64)>> {
    let n = h.n;
    if n % m != 0 {
        return vec![];
    }
    let mut found: BTreeSet<Vec<(u64, u64)>> = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if additive_order((x, y), n) != m {
                continue;
            }
            let mut span: Vec<(u64, u64)> = (0..m).map(|k| (k * x % n, k * y % n)).collect();
            span.sort_unstable();
            if h.elements.iter().all(|g| span.binary_search(&g.apply((x, y))).is_ok()) {
                found.insert(span);
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(gl2_order(2), 6);
        assert_eq!(gl2_order(3), 48);
        assert_eq!(gl2_order(4), 96);
        for n in 2..=4 {
            assert_eq!(GL2Group::new(n).unwrap().order() as u64, gl2_order(n));
        }
        assert!(matches!(GL2Group::new(5), Err(Error::EnumerationCap(5))));
    }

    #[test]
    fn s3_lattice() {
        let subs = enumerate_subgroups(2).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(subgroup_classes(2).unwrap().len(), 4);
    }

    #[test]
    fn lines_fixed() {
        let g = GL2Group::new(3).unwrap();
        let trivial = g.to_subgroup(g.closure(0));
        assert_eq!(fixed_cyclic_subgroups(&trivial, 3).len(), 4);
        let full = g.to_subgroup(u128::MAX >> (128 - g.order()));
        assert!(fixed_cyclic_subgroups(&full, 3).is_empty());
        assert!(!is_abelian(&full));
        assert!(is_abelian(&trivial));
    }
}
