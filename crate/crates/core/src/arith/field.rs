//! A minimal field-element interface so curve arithmetic can run over
//! number fields and prime fields alike.

use std::fmt::Debug;

use super::rat::{inv_mod, mul_mod, rat_mod, Rat};

pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Embeds a rational into the same field; `None` if not representable (e.g. p | denominator).
    fn rat_like(&self, r: &Rat) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn small(&self, k: i64) -> Self {
        self.rat_like(&Rat::from_integer(k.into())).expect("small integers embed")
    }
    fn square(&self) -> Self {
        self.mul(self)
    }
}

/// Element of the prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }
}

impl FieldElem for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.p)
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.p)
    }
    fn rat_like(&self, r: &Rat) -> Option<Self> {
        rat_mod(r, self.p).map(|v| Fp::new(v, self.p))
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp::new(self.v + o.v, self.p)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::new(self.v + self.p - o.v, self.p)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::new(mul_mod(self.v, o.v, self.p), self.p)
    }
    fn neg(&self) -> Self {
        Fp::new(self.p - self.v, self.p)
    }
    fn inv(&self) -> Option<Self> {
        inv_mod(self.v, self.p).map(|v| Fp::new(v, self.p))
    }
}
