//! Polynomials over prime fields F_p (p < 2^63).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rat::{inv_mod, is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFPoly {
    p: u64,
    c: Vec<u64>,
}

impl FFPoly {
    pub fn new(p: u64, c: Vec<u64>) -> Self {
        let mut f = FFPoly { p, c: c.into_iter().map(|a| a % p).collect() };
        f.trim();
        f
    }

    pub fn from_i64(p: u64, c: &[i64]) -> Self {
        Self::new(p, c.iter().map(|&a| a.rem_euclid(p as i64) as u64).collect())
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        FFPoly { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &a| (mul_mod(acc, x, self.p) + a) % self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p).expect("prime modulus");
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mul_mod(a, k, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(self.p, (0..n).map(|i| (g(&self.c, i) + g(&o.c, i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(self.p, (0..n).map(|i| (g(&self.c, i) + self.p - g(&o.c, i)) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, v.into_iter().map(|a| a as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(self.p), self.clone());
        }
        let inv = inv_mod(d.lead(), self.p).expect("prime modulus");
        let mut r = self.c.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mul_mod(r[i + dd], inv, self.p);
            if c != 0 {
                for (j, &dc) in d.c.iter().enumerate() {
                    r[i + j] = (r[i + j] + self.p - mul_mod(c, dc, self.p)) % self.p;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s*self + t*o = g monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lead(), p).expect("prime modulus");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c.iter().enumerate().skip(1).map(|(i, &a)| mul_mod(a, i as u64 % self.p, self.p)).collect(),
        )
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    fn pow_big_mod(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return vec![];
        }
        let mut out: Vec<u64> = ff_factor_unchecked(self)
            .into_iter()
            .filter(|(f, _)| f.deg() == 1)
            .map(|(f, _)| (self.p - f.c[0]) % self.p)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Monic irreducible factorization over F_p, sorted by (degree, coefficients).
pub fn ff_factor(f: &FFPoly) -> Result<Vec<(FFPoly, usize)>> {
    if !is_prime(f.p) {
        return Err(Error::CompositeModulus(f.p));
    }
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(ff_factor_unchecked(f))
}

fn ff_factor_unchecked(f: &FFPoly) -> Vec<(FFPoly, usize)> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ f.p);
    for (g, m) in squarefree(&f.monic()) {
        for (d, part) in distinct_degree(&g) {
            let mut pieces = Vec::new();
            equal_degree(&part, d, &mut rng, &mut pieces);
            out.extend(pieces.into_iter().map(|h| (h, m)));
        }
    }
    out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.0.c.cmp(&b.0.c)).then(a.1.cmp(&b.1)));
    out
}

/// Square-free decomposition of a monic polynomial: list of (g_i, i).
pub fn squarefree(f: &FFPoly) -> Vec<(FFPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p)
        let g = FFPoly::new(p, f.c.iter().step_by(p as usize).copied().collect());
        for (h, m) in squarefree(&g) {
            out.push((h, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.deg() > 0 {
        let g = FFPoly::new(p, c.c.iter().step_by(p as usize).copied().collect());
        for (h, m) in squarefree(&g.monic()) {
            out.push((h, m * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
pub fn distinct_degree(f: &FFPoly) -> Vec<(usize, FFPoly)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FFPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest.monic()));
    }
    out
}

fn equal_degree(f: &FFPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FFPoly>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    loop {
        let a = FFPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_big_mod(&e, f).sub(&FFPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Degrees of irreducible factors (with multiplicity) of f mod p.
pub fn factor_degrees(f: &FFPoly) -> Vec<usize> {
    let mut v: Vec<usize> = ff_factor_unchecked(f)
        .into_iter()
        .flat_map(|(g, m)| std::iter::repeat(g.deg()).take(m))
        .collect();
    v.sort_unstable();
    v
}

pub fn legendre(a: u64, p: u64) -> i64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}
