//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use super::rat::{fmt_rat, lcm_denoms, parse_rat, Rat};
use crate::error::{Error, Result};

/// Coefficients lowest degree first; no trailing zeros.
/// Serialized as a list of decimal strings.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        self.scale(&(Rat::one() / l))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`
    pub fn shift(&self, c: &Rat) -> Self {
        self.compose(&Self::new(vec![c.clone(), Rat::one()]))
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroInput);
        }
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = Rat::one() / d.lead();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g monic.
    pub fn xgcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Rat::one() / r0.lead();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Rational multiple with coprime integer coefficients and positive lead.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.to_integer_coeffs();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num_integer::Integer::gcd(&g, c);
        }
        if self.lead().is_negative() {
            g = -g;
        }
        Self::new(
            ints.into_iter()
                .map(|c| Rat::from_integer(c / &g))
                .collect(),
        )
    }

    /// Coefficients scaled by the lcm of denominators.
    pub fn to_integer_coeffs(&self) -> Vec<BigInt> {
        let l = lcm_denoms(&self.coeffs);
        self.coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    pub fn discriminant(&self) -> Rat {
        let n = self.deg();
        let r = super::resultant::resultant(self, &self.derivative()).unwrap_or_else(|_| Rat::zero());
        let sign = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 { -Rat::one() } else { Rat::one() };
        sign * r / self.lead()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<UniPoly> for Vec<String> {
    fn from(p: UniPoly) -> Self {
        p.coeffs.iter().map(fmt_rat).collect()
    }
}

impl TryFrom<Vec<String>> for UniPoly {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ok(UniPoly::new(v.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_c = !a.is_one() || i == 0;
            if show_c {
                write!(f, "{}", fmt_rat(&a))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_c { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_c { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn division_and_gcd() {
        let f = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let g = UniPoly::from_ints(&[-1, 0, 1]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(f.gcd(&UniPoly::from_ints(&[1, 1])), UniPoly::from_ints(&[1, 1]));
        let (d, s, t) = q.xgcd(&g);
        assert_eq!(d, UniPoly::one());
        assert_eq!(&(&s * &q) + &(&t * &g), UniPoly::one());
    }

    #[test]
    fn display_and_eval() {
        let f = UniPoly::from_ints(&[-4, -3, 0, 1]);
        assert_eq!(f.to_string(), "x^3 - 3*x - 4");
        assert_eq!(f.eval(&rat(2)), rat(-2));
        assert_eq!(f.discriminant(), rat(-324));
    }
}
