//! Absolute number fields Q[x]/(f) in the power basis, and root finding
//! in them by Trager's norm method.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::factor::{factors_with_degree, is_irreducible, rational_roots};
use super::field::FieldElem;
use super::poly::UniPoly;
use super::ffpoly::FFPoly;
use super::rat::{big_mod_u64, fmt_rat, is_prime, mul_mod, rat, rat_mod, Rat};
use super::resultant::resultant;
use crate::error::{Error, Result};

pub struct NumberField {
    poly: UniPoly,
    label: Option<String>,
    /// x^(n+k) mod f for k = 0..n-1, as coordinate vectors
    reductions: Vec<Vec<Rat>>,
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn defining_poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn same(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.poly == other.poly
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "NumberField({l}: {})", self.poly),
            None => write!(f, "NumberField({})", self.poly),
        }
    }
}

pub type Field = Arc<NumberField>;

/// Validates `f` (monic, irreducible) and builds the field.
pub fn make_number_field(f: &UniPoly) -> Result<Field> {
    make_labeled(f, None)
}

pub fn make_labeled(f: &UniPoly, label: Option<String>) -> Result<Field> {
    if f.degree().is_none_or(|d| d < 1) || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.deg() > 1 && !is_irreducible(f) {
        return Err(Error::ReducibleDefiningPolynomial);
    }
    Ok(build(f.clone(), label))
}

fn build(poly: UniPoly, label: Option<String>) -> Field {
    let n = poly.deg();
    let mut reductions = Vec::with_capacity(n);
    // x^n = -(f - x^n)
    let mut cur: Vec<Rat> = (0..n).map(|i| -poly.coeff(i)).collect();
    for _ in 0..n {
        reductions.push(cur.clone());
        // multiply by x
        let top = cur[n - 1].clone();
        let mut next = vec![Rat::zero(); n];
        for i in (1..n).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for i in 0..n {
                next[i] -= &top * poly.coeff(i);
            }
        }
        cur = next;
    }
    Arc::new(NumberField { poly, label, reductions })
}

pub fn rationals() -> Field {
    build(UniPoly::x(), Some("Q".into()))
}

/// Q(sqrt d) with defining polynomial x^2 - d.
pub fn quadratic_field(d: i64) -> Result<Field> {
    make_labeled(&UniPoly::from_ints(&[-d, 0, 1]), Some(format!("Q(sqrt({d}))")))
}

#[derive(Clone)]
pub struct NFElement {
    field: Field,
    coords: Vec<Rat>,
}

impl PartialEq for NFElement {
    fn eq(&self, o: &Self) -> bool {
        self.coords == o.coords
    }
}
impl Eq for NFElement {}

impl std::hash::Hash for NFElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state)
    }
}

impl NFElement {
    pub fn from_coords(field: &Field, mut coords: Vec<Rat>) -> Self {
        coords.resize(field.degree(), Rat::zero());
        NFElement { field: field.clone(), coords }
    }

    pub fn from_rat(field: &Field, r: Rat) -> Self {
        let mut c = vec![Rat::zero(); field.degree()];
        c[0] = r;
        NFElement { field: field.clone(), coords: c }
    }

    /// The class of `p(x)` modulo the defining polynomial.
    pub fn from_poly(field: &Field, p: &UniPoly) -> Self {
        let r = p.rem(field.defining_poly()).expect("nonzero modulus");
        Self::from_coords(field, r.coeffs().to_vec())
    }

    pub fn generator(field: &Field) -> Self {
        if field.degree() == 1 {
            return Self::from_rat(field, -field.defining_poly().coeff(0));
        }
        Self::from_poly(field, &UniPoly::x())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.coords.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    pub fn norm(&self) -> Rat {
        if self.field.degree() == 1 {
            return self.coords[0].clone();
        }
        let p = self.to_poly();
        if p.is_zero() {
            return Rat::zero();
        }
        resultant(self.field.defining_poly(), &p).expect("nonzero inputs")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", fmt_rat(&self.coords[0]));
        }
        let s = self.to_poly().to_string().replace('x', "a");
        write!(f, "{s}")
    }
}

impl FieldElem for NFElement {
    fn zero_like(&self) -> Self {
        Self::from_rat(&self.field, Rat::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rat(&self.field, Rat::one())
    }
    fn rat_like(&self, r: &Rat) -> Option<Self> {
        Some(Self::from_rat(&self.field, r.clone()))
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        let c = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        NFElement { field: self.field.clone(), coords: c }
    }
    fn sub(&self, o: &Self) -> Self {
        let c = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        NFElement { field: self.field.clone(), coords: c }
    }
    fn mul(&self, o: &Self) -> Self {
        let n = self.field.degree();
        if n == 1 {
            return Self::from_rat(&self.field, &self.coords[0] * &o.coords[0]);
        }
        let mut prod = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rat> = prod[..n].to_vec();
        for (k, c) in prod[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in self.field.reductions[k].iter().enumerate() {
                if !r.is_zero() {
                    out[i] += c * r;
                }
            }
        }
        NFElement { field: self.field.clone(), coords: out }
    }
    fn neg(&self) -> Self {
        NFElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.field.degree() == 1 {
            return Some(Self::from_rat(&self.field, Rat::one() / &self.coords[0]));
        }
        let (g, s, _) = self.to_poly().xgcd(self.field.defining_poly());
        debug_assert_eq!(g, UniPoly::one());
        Some(Self::from_poly(&self.field, &s))
    }
}

/// Polynomial with number-field coefficients, lowest degree first.
#[derive(Clone, Debug)]
pub struct NFPoly {
    field: Field,
    coeffs: Vec<NFElement>,
}

impl PartialEq for NFPoly {
    fn eq(&self, o: &Self) -> bool {
        self.coeffs == o.coeffs
    }
}

impl NFPoly {
    pub fn new(field: &Field, mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NFPoly { field: field.clone(), coeffs }
    }

    pub fn from_rational(field: &Field, p: &UniPoly) -> Self {
        Self::new(field, p.coeffs().iter().map(|c| NFElement::from_rat(field, c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn zero_elem(&self) -> NFElement {
        NFElement::from_rat(&self.field, Rat::zero())
    }

    pub fn eval(&self, x: &NFElement) -> NFElement {
        let mut acc = self.zero_elem();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero lead");
                Self::new(&self.field, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&c.small(i as i64))).collect(),
        )
    }

    pub fn rem(&self, d: &NFPoly) -> NFPoly {
        self.div_rem(d).1
    }

    pub fn div_rem(&self, d: &NFPoly) -> (NFPoly, NFPoly) {
        assert!(!d.is_zero());
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (NFPoly::new(&self.field, vec![]), self.clone());
        }
        let inv = d.coeffs.last().unwrap().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        let mut q = vec![self.zero_elem(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul(&inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].sub(&c.mul(dc));
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (NFPoly::new(&self.field, q), NFPoly::new(&self.field, r))
    }

    pub fn gcd(&self, o: &NFPoly) -> NFPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self(y + c)`
    pub fn shift(&self, c: &NFElement) -> NFPoly {
        // Horner in the ring K[y]
        let mut acc: Vec<NFElement> = vec![];
        for a in self.coeffs.iter().rev() {
            // acc = acc * (y + c) + a
            let mut next = vec![self.zero_elem(); acc.len() + 1];
            for (i, t) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].add(t);
                next[i] = next[i].add(&t.mul(c));
            }
            next[0] = next[0].add(a);
            acc = next;
        }
        NFPoly::new(&self.field, acc)
    }

    pub fn as_rational(&self) -> Option<UniPoly> {
        self.coeffs.iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>().map(UniPoly::new)
    }
}

/// Roots of `g` lying in the field, each verified by exact evaluation.
pub fn nf_roots(field: &Field, g: &NFPoly) -> Result<Vec<NFElement>> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if g.deg() == 0 {
        return Ok(vec![]);
    }
    let n = field.degree();
    let mut roots = Vec::new();
    if let Some(rg) = g.as_rational() {
        // only factors of degree dividing n can have a root in the field
        for h in factors_with_degree(&rg, n, &|d| n % d == 0) {
            if h.deg() == 1 {
                roots.push(NFElement::from_rat(field, -h.coeff(0)));
            } else {
                roots.extend(trager_roots(field, &NFPoly::from_rational(field, &h)));
            }
        }
    } else if n == 1 {
        unreachable!("every polynomial over Q is rational");
    } else {
        let sq = g.gcd(&g.derivative());
        let h = g.div_rem(&sq).0.monic();
        roots = trager_roots(field, &h);
    }
    roots.retain(|r| g.eval(r).is_zero());
    roots.sort_by(|a, b| a.coords.cmp(&b.coords));
    roots.dedup();
    Ok(roots)
}

/// Norm degree from which the modular screen is worth running first.
const SCREEN_MIN_NORM_DEGREE: usize = 24;
const SCREEN_PRIMES: usize = 16;
/// Primes above one l have correlated splitting, so only a few are tried per l.
const SCREEN_ROOTS_PER_PRIME: usize = 2;

/// True when g mod P has no root in F_l for some degree-1 prime P = (l, theta - r).
/// Sound for monic g: a root in F is integral at P wherever g is, so it
/// would reduce to a root mod P.
fn rootless_mod_some_prime(field: &Field, g: &NFPoly) -> bool {
    if !g.coeffs.last().is_some_and(|c| c.as_rational().is_some_and(|r| r.is_one())) {
        return false;
    }
    let f = field.defining_poly();
    let disc = f.discriminant();
    let mut used = 0;
    let mut l = 101u64;
    while used < SCREEN_PRIMES && l < 20_000 {
        l += 2;
        if !is_prime(l) || big_mod_u64(disc.numer(), l) == 0 {
            continue;
        }
        let Some(fc) = f.coeffs().iter().map(|c| rat_mod(c, l)).collect::<Option<Vec<u64>>>() else { continue };
        let fl = FFPoly::new(l, fc);
        if fl.deg() != f.deg() {
            continue;
        }
        let roots = fl.roots();
        if !roots.is_empty() {
            used += 1;
        }
        for r in roots.into_iter().take(SCREEN_ROOTS_PER_PRIME) {
            let reduce = |c: &NFElement| -> Option<u64> {
                let mut acc = 0;
                for q in c.coords.iter().rev() {
                    acc = (mul_mod(acc, r, l) + rat_mod(q, l)?) % l;
                }
                Some(acc)
            };
            let Some(gc) = g.coeffs.iter().map(reduce).collect::<Option<Vec<u64>>>() else { continue };
            let gl = FFPoly::new(l, gc);
            if gl.deg() != g.deg() {
                continue;
            }
            let x = FFPoly::x(l);
            let frob = x.pow_mod(l as u128, &gl).sub(&x);
            if frob.gcd(&gl).deg() == 0 {
                return true;
            }
        }
    }
    false
}

/// Roots of a squarefree monic `g` over a field of degree > 1.
fn trager_roots(field: &Field, g: &NFPoly) -> Vec<NFElement> {
    let n = field.degree();
    if g.deg() == 1 {
        return vec![g.coeffs[0].neg().mul(&g.coeffs[1].inv().unwrap())];
    }
    if g.deg() * n >= SCREEN_MIN_NORM_DEGREE && rootless_mod_some_prime(field, g) {
        return vec![];
    }
    let alpha = NFElement::generator(field);
    for s in [0i64, 1, -1, 2, -2, 3, -3, 4, 5, 7] {
        let sa = alpha.mul(&alpha.small(s));
        // G(y) = g(y - s*alpha)
        let big_g = g.shift(&sa.neg());
        let norm = norm_poly(field, &big_g);
        if !norm.is_squarefree() {
            continue;
        }
        let mut out = Vec::new();
        for ni in factors_with_degree(&norm, n, &|d| d == n) {
            // gcd(g(y), N_i(y + s*alpha)) is linear
            let shifted = NFPoly::from_rational(field, &ni).shift(&sa);
            let lin = g.gcd(&shifted);
            if lin.deg() == 1 {
                out.push(lin.coeffs[0].neg());
            }
        }
        return out;
    }
    // every shift failed to give a squarefree norm: fall back to nothing found
    // (cannot happen for squarefree g; the shift set is far larger than needed)
    Vec::new()
}

/// Norm_{K/Q} of a polynomial over K, by evaluation at integer points and interpolation.
pub fn norm_poly(field: &Field, g: &NFPoly) -> UniPoly {
    let total = field.degree() * g.deg();
    let xs: Vec<Rat> = (0..=total as i64).map(rat).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| g.eval(&NFElement::from_rat(field, x.clone())).norm())
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through the given points.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &UniPoly::new(vec![-xs[i].clone(), Rat::one()])) + &UniPoly::constant(dd[i].clone());
    }
    p
}

/// Finds `r` in `field` with r^2 = c.
pub fn nf_sqrt(c: &NFElement) -> Option<NFElement> {
    let f = c.field().clone();
    if c.is_zero() {
        return Some(c.clone());
    }
    if let Some(q) = c.as_rational() {
        if let Some(r) = super::rat::rat_sqrt(&q) {
            return Some(NFElement::from_rat(&f, r));
        }
        if f.degree() == 1 {
            return None;
        }
    }
    let g = NFPoly::new(&f, vec![c.neg(), c.zero_like(), c.one_like()]);
    nf_roots(&f, &g).ok()?.into_iter().next()
}

/// Rational roots of a rational polynomial, as a convenience for degree-1 fields.
pub fn roots_in_q(f: &UniPoly) -> Vec<Rat> {
    rational_roots(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat_frac;

    #[test]
    fn spec_examples() {
        let k = quadratic_field(5).unwrap();
        let g = NFPoly::from_rational(&k, &UniPoly::from_ints(&[-1, -1, 1]));
        let r = nf_roots(&k, &g).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(g.eval(x).is_zero());
            assert_eq!(x.coords()[0], rat_frac(1, 2));
        }
        let q = rationals();
        let h = NFPoly::from_rational(&q, &UniPoly::from_ints(&[-4, -3, 0, 1]));
        assert!(nf_roots(&q, &h).unwrap().is_empty());
        let i = quadratic_field(-1).unwrap();
        let r = nf_roots(&i, &NFPoly::from_rational(&i, &UniPoly::from_ints(&[1, 0, 1]))).unwrap();
        assert_eq!(r.len(), 2);
        assert!(make_number_field(&UniPoly::from_ints(&[-4, 0, 1])).is_err());
    }

    #[test]
    fn nonrational_coefficients() {
        // (y - a)(y - a - 1) over Q(cbrt 2)
        let k = make_number_field(&UniPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let a = NFElement::generator(&k);
        let a1 = a.add(&a.one_like());
        let g = NFPoly::new(&k, vec![a.mul(&a1), a.add(&a1).neg(), a.one_like()]);
        let r = nf_roots(&k, &g).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&a) && r.contains(&a1));
    }

    #[test]
    fn inverse_and_norm() {
        let k = make_number_field(&UniPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let a = NFElement::generator(&k);
        let b = a.add(&a.one_like());
        assert_eq!(b.mul(&b.inv().unwrap()), b.one_like());
        assert_eq!(a.norm(), rat(2));
        assert_eq!(nf_sqrt(&a.mul(&a)).map(|r| r.mul(&r)), Some(a.mul(&a)));
    }
}
