//! Factorization over Q: square-free decomposition, modular factorization,
//! Hensel lifting and Zassenhaus recombination.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ffpoly::{ff_factor, FFPoly};
use super::poly::UniPoly;
use super::rat::{big_mod_u64, is_prime, Rat};
use crate::error::{Error, Result};

type ZPoly = Vec<BigInt>;

/// Monic irreducible factors with multiplicities; `lead * prod = f`.
pub fn poly_factor_rationals(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(&f.monic()) {
        for h in zassenhaus(&to_z(&g), &|_| true, usize::MAX) {
            out.push((from_z(&h).monic(), m));
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// All monic irreducible factors of `f` whose degree satisfies `accept` and is at most `max_deg`.
pub fn factors_with_degree(f: &UniPoly, max_deg: usize, accept: &dyn Fn(usize) -> bool) -> Vec<UniPoly> {
    if f.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    for (g, _) in squarefree_decomposition(&f.monic()) {
        for h in zassenhaus(&to_z(&g), accept, max_deg) {
            if h.len() - 1 <= max_deg && accept(h.len() - 1) {
                out.push(from_z(&h).monic());
            }
        }
    }
    out.sort_by(cmp_poly);
    out.dedup();
    out
}

pub fn rational_roots(f: &UniPoly) -> Vec<Rat> {
    let mut v: Vec<Rat> = factors_with_degree(f, 1, &|d| d == 1)
        .into_iter()
        .map(|g| -g.coeff(0))
        .collect();
    v.sort();
    v
}

pub fn is_irreducible(f: &UniPoly) -> bool {
    if f.deg() == 0 {
        return false;
    }
    f.is_squarefree() && zassenhaus(&to_z(f), &|_| true, usize::MAX).len() == 1
}

/// Deterministic ordering: degree, then coefficients from the constant term up.
pub fn cmp_poly(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Yun's algorithm over Q; input monic.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.monic(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn to_z(f: &UniPoly) -> ZPoly {
    f.primitive_part().to_integer_coeffs()
}

fn from_z(f: &ZPoly) -> UniPoly {
    UniPoly::from_bigints(f)
}

fn zdeg(f: &ZPoly) -> usize {
    f.len() - 1
}

fn ztrim(mut f: ZPoly) -> ZPoly {
    while f.len() > 1 && f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn zmul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    zred(v, m)
}

fn zred(v: ZPoly, m: &BigInt) -> ZPoly {
    ztrim(v.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn zadd(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zred((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect(), m)
}

fn zsub(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zred((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect(), m)
}

/// Division by a monic polynomial modulo m.
fn zdivrem(a: &ZPoly, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let dd = zdeg(d);
    if a.len() <= dd {
        return (vec![BigInt::zero()], a.clone());
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].mod_floor(m);
        if !c.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                r[i + j] = (&r[i + j] - &c * dc).mod_floor(m);
            }
        }
        q[i] = c;
    }
    r.truncate(dd.max(1));
    if dd == 0 {
        r = vec![BigInt::zero()];
    }
    (zred(q, m), zred(r, m))
}

fn ff_to_z(f: &FFPoly) -> ZPoly {
    if f.is_zero() {
        return vec![BigInt::zero()];
    }
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn z_to_ff(f: &ZPoly, p: u64) -> FFPoly {
    FFPoly::new(p, f.iter().map(|c| big_mod_u64(c, p)).collect())
}

fn inv_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

fn hensel_step(f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zsub(&zred(f.clone(), &m2), &zmul(g, h, &m2), &m2);
    let (q, r) = zdivrem(&zmul(s, &e, &m2), h, &m2);
    let g2 = zadd(&zadd(g, &zmul(t, &e, &m2), &m2), &zmul(&q, g, &m2), &m2);
    let h2 = zadd(h, &r, &m2);
    let b = zsub(&zadd(&zmul(s, &g2, &m2), &zmul(t, &h2, &m2), &m2), &vec![BigInt::one()], &m2);
    let (c, d) = zdivrem(&zmul(s, &b, &m2), &h2, &m2);
    let s2 = zsub(s, &d, &m2);
    let t2 = zsub(&zsub(t, &zmul(t, &b, &m2), &m2), &zmul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts monic modular factors of f (lead coefficient carried separately) to modulus p^(2^steps).
fn multifactor_lift(f: &ZPoly, factors: &[FFPoly], p: u64, steps: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    for _ in 0..steps {
        modulus = &modulus * &modulus;
    }
    if factors.len() == 1 {
        let lc = f.last().unwrap().clone();
        let inv = inv_big(&lc, &modulus);
        return vec![zred(f.iter().map(|c| c * &inv).collect(), &modulus)];
    }
    let k = factors.len() / 2;
    let lc_p = big_mod_u64(f.last().unwrap(), p);
    let g0 = factors[..k].iter().fold(FFPoly::new(p, vec![lc_p]), |a, b| a.mul(b));
    let h0 = factors[k..].iter().fold(FFPoly::one(p), |a, b| a.mul(b));
    let (_, s0, t0) = g0.xgcd(&h0);
    let (mut g, mut h, mut s, mut t) = (ff_to_z(&g0), ff_to_z(&h0), ff_to_z(&s0), ff_to_z(&t0));
    let mut m = pb;
    for _ in 0..steps {
        let r = hensel_step(f, &g, &h, &s, &t, &m);
        g = r.0;
        h = r.1;
        s = r.2;
        t = r.3;
        m = &m * &m;
    }
    let mut out = lift_target(&g, &factors[..k], p, steps, &modulus);
    out.extend(lift_target(&h, &factors[k..], p, steps, &modulus));
    out
}

fn lift_target(target: &ZPoly, factors: &[FFPoly], p: u64, steps: u32, modulus: &BigInt) -> Vec<ZPoly> {
    // the target is only known modulo `modulus`, which is all the recursion needs
    let t = zred(target.clone(), modulus);
    multifactor_lift(&t, factors, p, steps)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn content(f: &ZPoly) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(f: ZPoly) -> ZPoly {
    let g = content(&f);
    let sg = if f.last().is_some_and(|c| c.is_negative()) { -g } else { g };
    f.into_iter().map(|c| c / &sg).collect()
}

/// Exact division over Z; None if not divisible.
fn zdiv_exact(a: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    let dd = zdeg(d);
    if a.len() <= dd {
        return None;
    }
    let lc = d.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
        }
        q[i] = c;
    }
    r[..dd].iter().all(|c| c.is_zero()).then_some(q)
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &(&s * &s) == n {
        s
    } else {
        s + 1
    }
}

/// Irreducible primitive factors of a square-free primitive integer polynomial.
/// With a restrictive `accept`, only factors of accepted degree (<= max_deg) are searched.
fn zassenhaus(f: &ZPoly, accept: &dyn Fn(usize) -> bool, max_deg: usize) -> Vec<ZPoly> {
    let n = zdeg(f);
    if n <= 1 {
        return vec![primitive(f.clone())];
    }
    let full = max_deg >= n;
    // x | f is handled directly; modular methods prefer a nonzero constant term
    if f[0].is_zero() {
        let rest = primitive(f[1..].to_vec());
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(zassenhaus(&rest, accept, max_deg));
        return out;
    }
    let lc = f.last().unwrap().clone();
    let mut best: Option<(u64, Vec<FFPoly>)> = None;
    let mut reachable: Vec<bool> = vec![true; n + 1];
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 6 && p < 100_000 {
        p += 1;
        if !is_prime(p) || big_mod_u64(&lc, p) == 0 {
            continue;
        }
        let fp = z_to_ff(f, p);
        if fp.deg() != n || fp.gcd(&fp.derivative()).deg() > 0 {
            continue;
        }
        tried += 1;
        let fs: Vec<FFPoly> = ff_factor(&fp.monic()).expect("prime").into_iter().map(|(g, _)| g).collect();
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for g in &fs {
            for s in (g.deg()..=n).rev() {
                if sums[s - g.deg()] {
                    sums[s] = true;
                }
            }
        }
        for (r, s) in reachable.iter_mut().zip(sums) {
            *r &= s;
        }
        if fs.len() == 1 {
            return vec![primitive(f.clone())];
        }
        if best.as_ref().is_none_or(|b| fs.len() < b.1.len()) {
            best = Some((p, fs));
        }
    }
    let (p, fs) = best.expect("some prime works for a squarefree polynomial");
    if (1..n).all(|d| !reachable[d]) {
        return vec![primitive(f.clone())];
    }
    if !full && !(1..=max_deg.min(n)).any(|d| reachable[d] && accept(d)) {
        return vec![];
    }
    // coefficient bound for factors of degree <= n
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = isqrt_ceil(&norm2) * (BigInt::one() << n) * lc.abs() * 2 + 1;
    let pb = BigInt::from(p);
    let mut steps = 0u32;
    let mut m = pb.clone();
    while m <= bound {
        m = &m * &m;
        steps += 1;
    }
    let lifted = multifactor_lift(f, &fs, p, steps);
    recombine(f.clone(), lifted, &m, max_deg, &reachable)
}

fn recombine(
    mut f: ZPoly,
    mut fs: Vec<ZPoly>,
    m: &BigInt,
    max_deg: usize,
    reachable: &[bool],
) -> Vec<ZPoly> {
    let full = max_deg >= zdeg(&f);
    let mut out = Vec::new();
    let mut s = 1;
    loop {
        let r = fs.len();
        let limit = if full { r / 2 } else { r };
        if s > limit {
            break;
        }
        let mut found = None;
        let degs: Vec<usize> = fs.iter().map(zdeg).collect();
        for_each_subset(r, s, &mut |idx: &[usize]| {
            let d: usize = idx.iter().map(|&i| degs[i]).sum();
            if !reachable.get(d).copied().unwrap_or(false) {
                return false;
            }
            if !full && (d > max_deg) {
                return false;
            }
            let lc = f.last().unwrap().clone();
            // cheap constant-term test first
            let c0 = idx.iter().fold(lc.clone(), |a, &i| (a * &fs[i][0]).mod_floor(m));
            let c0 = symmetric(&c0, m);
            if c0.is_zero() || !(&lc * &f[0]).is_multiple_of(&c0) {
                return false;
            }
            let prod = idx.iter().fold(vec![lc.clone()], |a, &i| zmul(&a, &fs[i], m));
            let g = primitive(prod.iter().map(|c| symmetric(c, m)).collect());
            if let Some(q) = zdiv_exact(&f, &g) {
                found = Some((idx.to_vec(), g, q));
                return true;
            }
            false
        });
        match found {
            Some((idx, g, q)) => {
                out.push(g);
                f = primitive(q);
                let mut k = 0;
                fs.retain(|_| {
                    k += 1;
                    !idx.contains(&(k - 1))
                });
            }
            None => s += 1,
        }
    }
    if full && zdeg(&f) > 0 {
        out.push(f);
    }
    if !full {
        // a found candidate may be reducible only if smaller subsets were skipped
        out = out
            .into_iter()
            .flat_map(|g| {
                if zdeg(&g) <= 1 {
                    vec![g]
                } else {
                    zassenhaus(&g, &|_| true, usize::MAX)
                }
            })
            .collect();
    }
    out
}

/// Calls `visit` on each k-subset of 0..n in lexicographic order until it returns true.
fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if k == 0 || k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(UniPoly, usize)]) -> UniPoly {
        fs.iter().fold(UniPoly::one(), |a, (g, m)| &a * &g.pow(*m as u32))
    }

    #[test]
    fn x4_minus_1() {
        let f = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let fs = poly_factor_rationals(&f).unwrap();
        let got: Vec<UniPoly> = fs.iter().map(|x| x.0.clone()).collect();
        assert_eq!(
            got,
            vec![UniPoly::from_ints(&[-1, 1]), UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[1, 0, 1])]
        );
    }

    #[test]
    fn irreducibles() {
        assert_eq!(poly_factor_rationals(&UniPoly::from_ints(&[1, 1, 1, 1, 1])).unwrap().len(), 1);
        assert_eq!(poly_factor_rationals(&UniPoly::from_ints(&[-4, -3, 0, 1])).unwrap().len(), 1);
        assert!(poly_factor_rationals(&UniPoly::zero()).is_err());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (x^2-2)(x^2-3)(x^4 - 10x^2 + 1)^2 * 3
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[-3, 0, 1]);
        let c = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        let f = (&(&a * &b) * &c.pow(2)).scale(&Rat::from_integer(3.into()));
        let fs = poly_factor_rationals(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs).scale(&f.lead()), f);
    }

    #[test]
    fn degree_filter() {
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[5, 1]);
        let c = UniPoly::from_ints(&[1, 1, 0, 1]);
        let f = &(&a * &b) * &c;
        assert_eq!(factors_with_degree(&f, 2, &|d| d == 2), vec![a]);
        assert_eq!(rational_roots(&f), vec![Rat::from_integer((-5).into())]);
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
