use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rat::{fmt_rat, rat, rat_mod, Rat};
use crate::error::{Error, Result};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EllipticCurveQ {
    a: [Rat; 5],
    label: Option<String>,
}

impl EllipticCurveQ {
    pub fn new(a: [Rat; 5]) -> Result<Self> {
        let e = EllipticCurveQ { a, label: None };
        if e.discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(rat))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn a_invariants(&self) -> &[Rat; 5] {
        &self.a
    }

    pub fn a1(&self) -> &Rat {
        &self.a[0]
    }
    pub fn a2(&self) -> &Rat {
        &self.a[1]
    }
    pub fn a3(&self) -> &Rat {
        &self.a[2]
    }
    pub fn a4(&self) -> &Rat {
        &self.a[3]
    }
    pub fn a6(&self) -> &Rat {
        &self.a[4]
    }

    pub fn b2(&self) -> Rat {
        self.a1() * self.a1() + rat(4) * self.a2()
    }
    pub fn b4(&self) -> Rat {
        rat(2) * self.a4() + self.a1() * self.a3()
    }
    pub fn b6(&self) -> Rat {
        self.a3() * self.a3() + rat(4) * self.a6()
    }
    pub fn b8(&self) -> Rat {
        let [a1, a2, a3, a4, a6] = &self.a;
        a1 * a1 * a6 + rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    }
    pub fn c4(&self) -> Rat {
        let b2 = self.b2();
        &b2 * &b2 - rat(24) * self.b4()
    }
    pub fn c6(&self) -> Rat {
        let b2 = self.b2();
        -(&b2 * &b2 * &b2) + rat(36) * &b2 * self.b4() - rat(216) * self.b6()
    }

    pub fn discriminant(&self) -> Rat {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(&b2 * &b2 * &b8) - rat(8) * &b4 * &b4 * &b4 - rat(27) * &b6 * &b6 + rat(9) * &b2 * &b4 * &b6
    }

    pub fn j_invariant(&self) -> Rat {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / self.discriminant()
    }

    /// (A, B) of the model y^2 = x^3 + A x + B reached by completing the
    /// square and depressing the cubic (no rescaling).
    pub fn short_form(&self) -> (Rat, Rat) {
        (-self.c4() / rat(48), -self.c6() / rat(864))
    }

    /// x-shift r with x_short = x + r.
    pub fn short_shift(&self) -> Rat {
        self.b2() / rat(12)
    }

    pub fn is_short(&self) -> bool {
        self.a1().is_zero() && self.a2().is_zero() && self.a3().is_zero()
    }

    /// Curve y^2 = x^3 + A x + B.
    pub fn short(a: Rat, b: Rat) -> Result<Self> {
        Self::new([Rat::zero(), Rat::zero(), Rat::zero(), a, b])
    }

    /// True if every a_i is integral at the prime p.
    pub fn integral_at(&self, p: u64) -> bool {
        self.a.iter().all(|c| rat_mod(c, p).is_some())
    }

    pub fn is_good_prime(&self, p: u64) -> bool {
        p > 2 && self.integral_at(p) && rat_mod(&self.discriminant(), p).is_some_and(|d| d != 0)
    }

    pub fn to_strings(&self) -> [String; 5] {
        self.a.clone().map(|c| fmt_rat(&c))
    }
}

impl fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_strings();
        write!(f, "[{}]", s.join(","))?;
        if let Some(l) = &self.label {
            write!(f, " ({l})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EllipticCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EllipticCurveQ{self}")
    }
}

/// Z/a x Z/b with a | b.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "[u64; 2]", try_from = "[u64; 2]")]
pub struct GroupShape {
    a: u64,
    b: u64,
}

impl GroupShape {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 || b % a != 0 {
            return Err(Error::Parse(format!("invalid group shape ({a},{b})")));
        }
        Ok(GroupShape { a, b })
    }

    pub fn cyclic(n: u64) -> Self {
        GroupShape { a: 1, b: n.max(1) }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }
    pub fn order(&self) -> u64 {
        self.a * self.b
    }

    /// Shape of a finite abelian group with at most two invariant factors,
    /// given as (prime, [e1, e2]) exponent data.
    pub fn from_primary(parts: &[(u64, u32, u32)]) -> Self {
        let (mut a, mut b) = (1, 1);
        for &(q, e1, e2) in parts {
            let (lo, hi) = (e1.min(e2), e1.max(e2));
            a *= q.pow(lo);
            b *= q.pow(hi);
        }
        GroupShape { a, b }
    }

    /// The q-primary part as (q^i, q^j) exponents (i <= j).
    pub fn q_part(&self, q: u64) -> (u32, u32) {
        (vp(self.a, q), vp(self.b, q))
    }

    /// Subgroup test for abstract groups with at most two invariant factors.
    pub fn contains(&self, o: &GroupShape) -> bool {
        self.b % o.b == 0 && self.a % o.a == 0
    }

    /// Restriction to the n-torsion: Z/gcd(a,n) x Z/gcd(b,n).
    pub fn torsion(&self, n: u64) -> Self {
        let g = |x: u64| num_integer::gcd(x, n);
        GroupShape { a: g(self.a), b: g(self.b) }
    }
}

pub fn vp(mut n: u64, q: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n % q == 0 {
        n /= q;
        e += 1;
    }
    e
}

impl From<GroupShape> for [u64; 2] {
    fn from(s: GroupShape) -> Self {
        [s.a, s.b]
    }
}

impl TryFrom<[u64; 2]> for GroupShape {
    type Error = Error;
    fn try_from(v: [u64; 2]) -> Result<Self> {
        GroupShape::new(v[0], v[1])
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (1, 1) => write!(f, "trivial"),
            (1, b) => write!(f, "Z/{b}Z"),
            (a, b) => write!(f, "Z/{a}Z x Z/{b}Z"),
        }
    }
}

impl One for GroupShape {
    fn one() -> Self {
        Self::trivial()
    }
}

impl std::ops::Mul for GroupShape {
    type Output = GroupShape;
    /// Direct product of groups of coprime order.
    fn mul(self, o: GroupShape) -> GroupShape {
        GroupShape { a: self.a * o.a, b: self.b * o.b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat_frac;

    #[test]
    fn short_forms() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        assert_eq!(e.short_form(), (rat(1), rat(0)));
        let e = EllipticCurveQ::from_ints([0, 0, 1, 0, 0]).unwrap();
        assert_eq!(e.short_form(), (rat(0), rat_frac(1, 4)));
        assert_eq!(EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap().j_invariant(), rat(1728));
        assert_eq!(EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap().j_invariant(), rat(0));
        assert!(EllipticCurveQ::from_ints([0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn shapes() {
        let s = GroupShape::new(2, 6).unwrap();
        assert_eq!(s.q_part(2), (1, 1));
        assert_eq!(s.q_part(3), (0, 1));
        assert!(s.contains(&GroupShape::cyclic(6)));
        assert!(!GroupShape::cyclic(6).contains(&s));
        assert!(GroupShape::new(2, 3).is_err());
        assert_eq!(GroupShape::from_primary(&[(2, 1, 1), (3, 0, 1)]), s);
    }
}
