//! Group law on long Weierstrass models over an arbitrary field.

use crate::arith::field::FieldElem;
use crate::arith::rat::Rat;
use crate::error::{Error, Result};

use super::model::EllipticCurveQ;

#[derive(Clone, PartialEq, Debug)]
pub enum CurvePoint<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: FieldElem> CurvePoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Infinity => None,
        }
    }
}

/// A rational curve base-changed to the field of `F`.
#[derive(Clone, Debug)]
pub struct CurveOver<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

impl<F: FieldElem> CurveOver<F> {
    /// Base change; `None` if a coefficient does not reduce into the field.
    pub fn new(e: &EllipticCurveQ, one: &F) -> Option<Self> {
        let c = |r: &Rat| one.rat_like(r);
        Some(CurveOver { a1: c(e.a1())?, a2: c(e.a2())?, a3: c(e.a3())?, a4: c(e.a4())?, a6: c(e.a6())? })
    }

    pub fn short(a: F, b: F) -> Self {
        let z = a.zero_like();
        CurveOver { a1: z.clone(), a2: z.clone(), a3: z, a4: a, a6: b }
    }

    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = y.square().add(&self.a1.mul(x).mul(y)).add(&self.a3.mul(y));
                let rhs = x.square().mul(x).add(&self.a2.mul(&x.square())).add(&self.a4.mul(x)).add(&self.a6);
                lhs == rhs
            }
        }
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone(), y.neg().sub(&self.a1.mul(x)).sub(&self.a3))
            }
        }
    }

    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (lambda, nu) = if x1 == x2 {
            let denom = y1.small(2).mul(y1).add(&self.a1.mul(x1)).add(&self.a3);
            if denom.is_zero() || y1.add(y2).add(&self.a1.mul(x2)).add(&self.a3).is_zero() {
                return CurvePoint::Infinity;
            }
            let inv = denom.inv().expect("nonzero");
            let num = x1.square().mul(&x1.small(3)).add(&self.a2.mul(x1).mul(&x1.small(2))).add(&self.a4).sub(&self.a1.mul(y1));
            let nnum = x1.square().mul(x1).neg().add(&self.a4.mul(x1)).add(&self.a6.mul(&x1.small(2))).sub(&self.a3.mul(y1));
            (num.mul(&inv), nnum.mul(&inv))
        } else {
            let inv = x2.sub(x1).inv().expect("distinct x");
            let lambda = y2.sub(y1).mul(&inv);
            let nu = y1.mul(x2).sub(&y2.mul(x1)).mul(&inv);
            (lambda, nu)
        };
        let x3 = lambda.square().add(&self.a1.mul(&lambda)).sub(&self.a2).sub(x1).sub(x2);
        let y3 = lambda.add(&self.a1).mul(&x3).neg().sub(&nu).sub(&self.a3);
        CurvePoint::affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, p)
    }

    pub fn mul(&self, p: &CurvePoint<F>, n: i64) -> CurvePoint<F> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.double(&b);
            }
        }
        acc
    }

    /// Order of a torsion point, searching up to `limit`.
    pub fn order(&self, p: &CurvePoint<F>, limit: u64) -> Option<u64> {
        let mut q = p.clone();
        for k in 1..=limit {
            if q.is_infinity() {
                return Some(k);
            }
            q = self.add(&q, p);
        }
        None
    }
}

/// [n]P for a point on E over the field of `F`.
pub fn point_mul<F: FieldElem>(e: &EllipticCurveQ, p: &CurvePoint<F>, n: i64) -> Result<CurvePoint<F>> {
    let one = match p {
        CurvePoint::Infinity => return Ok(CurvePoint::Infinity),
        CurvePoint::Affine { x, .. } => x.one_like(),
    };
    let c = CurveOver::new(e, &one).ok_or(Error::NotOnCurve)?;
    if !c.contains(p) {
        return Err(Error::NotOnCurve);
    }
    Ok(c.mul(p, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::numfield::{rationals, NFElement};
    use crate::arith::rat::rat;

    fn q(n: i64) -> NFElement {
        NFElement::from_rat(&rationals(), rat(n))
    }

    #[test]
    fn two_torsion_and_identity() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        let p = CurvePoint::affine(q(0), q(0));
        assert!(point_mul(&e, &p, 2).unwrap().is_infinity());
        assert_eq!(point_mul(&e, &p, 1).unwrap(), p);
        assert!(point_mul(&e, &CurvePoint::affine(q(1), q(1)), 2).is_err());
    }

    #[test]
    fn five_torsion_11a3() {
        // 11a3: y^2 + y = x^3 - x^2, torsion point (0,0) of order 5
        let e = EllipticCurveQ::from_ints([0, -1, 1, 0, 0]).unwrap();
        let p = CurvePoint::affine(q(0), q(0));
        for k in 1..5 {
            assert!(!point_mul(&e, &p, k).unwrap().is_infinity());
        }
        assert!(point_mul(&e, &p, 5).unwrap().is_infinity());
        assert_eq!(point_mul(&e, &p, -1).unwrap(), point_mul(&e, &p, 4).unwrap());
    }
}
