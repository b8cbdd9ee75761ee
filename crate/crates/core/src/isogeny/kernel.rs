use crate::arith::factor::{cmp_poly, factors_with_degree, rational_roots};
use crate::arith::ffpoly::FFPoly;
use crate::arith::poly::UniPoly;
use crate::arith::rat::{is_prime, rat_mod, Rat};
use crate::curve::divpoly::DivPolys;
use crate::curve::model::EllipticCurveQ;

use super::velu::velu_codomain;

/// Monic kernel polynomial of a rational isogeny of degree n, in the
/// x-coordinate of the short model of `curve`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPolynomial {
    pub poly: UniPoly,
    pub n: u64,
    pub curve: EllipticCurveQ,
}

/// Primes used for the modular closure screen.
const SCREEN_PRIMES: usize = 3;

/// Kernel polynomials of rational n-isogenies for n = 2 or an odd prime.
pub fn kernel_candidates(e: &EllipticCurveQ, n: u64) -> Vec<KernelPolynomial> {
    let (a, b) = e.short_form();
    let mut dp = DivPolys::new(&a, &b);
    if n == 2 {
        return rational_roots(dp.cubic())
            .into_iter()
            .map(|r| KernelPolynomial { poly: UniPoly::new(vec![-r, Rat::from_integer(1.into())]), n, curve: e.clone() })
            .collect();
    }
    assert!(n > 2 && is_prime(n), "kernel_candidates needs n = 2 or an odd prime");
    let d = ((n - 1) / 2) as usize;
    if !degree_screen(&a, &b, n, d) {
        return vec![];
    }
    let psi = dp.f(n as usize);
    let pieces = factors_with_degree(&psi, d, &|_| true);
    let mut out = Vec::new();
    for_each_product(&pieces, d, &mut |h| {
        if is_kernel(&mut dp, e, &h, n) {
            out.push(KernelPolynomial { poly: h, n, curve: e.clone() });
        }
    });
    out.sort_by(|x, y| cmp_poly(&x.poly, &y.poly));
    out
}

/// Products of distinct factors with total degree exactly d.
fn for_each_product(pieces: &[UniPoly], d: usize, f: &mut dyn FnMut(UniPoly)) {
    fn go(pieces: &[UniPoly], start: usize, left: usize, acc: UniPoly, f: &mut dyn FnMut(UniPoly)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in start..pieces.len() {
            if pieces[i].deg() <= left {
                go(pieces, i + 1, left - pieces[i].deg(), &acc * &pieces[i], f);
            }
        }
    }
    go(pieces, 0, d, UniPoly::one(), f)
}

/// Closure of the root set of h under x -> x([k]P), screened mod small
/// primes, then checked exactly, then confirmed by a nonsingular codomain.
pub(crate) fn is_kernel(dp: &mut DivPolys, e: &EllipticCurveQ, h: &UniPoly, n: u64) -> bool {
    let d = ((n - 1) / 2) as u64;
    let maps: Vec<(UniPoly, UniPoly)> = (2..=d).map(|k| dp.mult_x_formula(k)).collect();
    let mut screened = 0;
    let mut l = 3;
    while screened < SCREEN_PRIMES && l < 500 {
        l += 2;
        if !is_prime(l) || !e.is_good_prime(l) || l == n {
            continue;
        }
        let Some(hl) = reduce(h, l) else { continue };
        if hl.deg() != h.deg() || hl.gcd(&hl.derivative()).deg() > 0 {
            continue;
        }
        screened += 1;
        for (num, den) in &maps {
            let (Some(nl), Some(dl)) = (reduce(num, l), reduce(den, l)) else { return false };
            if !closed_mod(&hl, &nl, &dl) {
                return false;
            }
        }
    }
    for (num, den) in &maps {
        if !closed_exact(h, num, den) {
            return false;
        }
    }
    velu_codomain(e, h, n).is_ok()
}

/// Primes used for the degree-pattern screen.
const PATTERN_PRIMES: usize = 8;

/// A rational kernel polynomial of degree d reduces to a product of distinct
/// irreducible factors of psi_n mod l, so d must be a subset sum of their degrees.
fn degree_screen(a: &Rat, b: &Rat, n: u64, d: usize) -> bool {
    let mut used = 0;
    let mut l = 3;
    while used < PATTERN_PRIMES && l < 2000 {
        l += 2;
        if !is_prime(l) || l == n {
            continue;
        }
        let (Some(al), Some(bl)) = (rat_mod(a, l), rat_mod(b, l)) else { continue };
        // 4A^3 + 27B^2 != 0 mod l
        let disc = (4 * al % l * al % l * al + 27 * bl % l * bl) % l;
        if disc == 0 {
            continue;
        }
        used += 1;
        let psi = ff_division_poly(al, bl, n as usize, l);
        let mut sums = vec![false; d + 1];
        sums[0] = true;
        for (g, _) in crate::arith::ffpoly::ff_factor(&psi).expect("prime modulus") {
            for s in (g.deg()..=d).rev() {
                if sums[s - g.deg()] {
                    sums[s] = true;
                }
            }
        }
        if !sums[d] {
            return false;
        }
    }
    true
}

/// f_n (see curve::divpoly) over F_l.
pub(crate) fn ff_division_poly(a: u64, b: u64, n: usize, l: u64) -> FFPoly {
    let c = |v: &[u64]| FFPoly::new(l, v.iter().map(|x| x % l).collect());
    let (a2, a3) = (a * a % l, a * a % l * a % l);
    let neg = |x: u64| (l - x % l) % l;
    let cubic = c(&[b, a, 0, 1]);
    let f16 = cubic.mul(&cubic).scale(16 % l);
    let mut f = vec![
        FFPoly::zero(l),
        FFPoly::one(l),
        FFPoly::one(l),
        c(&[neg(a2), 12 * b % l, 6 * a % l, 0, 3]),
        c(&[neg(8 * b % l * b % l + a3), neg(4 * a % l * b), neg(5 * a2), 20 * b % l, 5 * a % l, 0, 1]).scale(2),
    ];
    while f.len() <= n {
        let k = f.len();
        let m = k / 2;
        let next = if k % 2 == 1 {
            let t1 = f[m + 2].mul(&f[m]).mul(&f[m]).mul(&f[m]);
            let t2 = f[m - 1].mul(&f[m + 1]).mul(&f[m + 1]).mul(&f[m + 1]);
            if m % 2 == 0 {
                f16.mul(&t1).sub(&t2)
            } else {
                t1.sub(&f16.mul(&t2))
            }
        } else {
            let inner = f[m + 2].mul(&f[m - 1]).mul(&f[m - 1]).sub(&f[m - 2].mul(&f[m + 1]).mul(&f[m + 1]));
            f[m].mul(&inner)
        };
        f.push(next);
    }
    f.swap_remove(n)
}

fn reduce(f: &UniPoly, l: u64) -> Option<FFPoly> {
    let c: Option<Vec<u64>> = f.coeffs().iter().map(|c| rat_mod(c, l)).collect();
    Some(FFPoly::new(l, c?))
}

fn closed_mod(h: &FFPoly, num: &FFPoly, den: &FFPoly) -> bool {
    let (g, s, _) = den.rem(h).xgcd(h);
    if g.deg() != 0 {
        return false;
    }
    let x = num.rem(h).mul(&s).rem(h);
    let mut acc = FFPoly::zero(h.modulus());
    for c in h.coeffs().iter().rev() {
        acc = acc.mul(&x).add(&FFPoly::new(h.modulus(), vec![*c])).rem(h);
    }
    acc.is_zero()
}

fn closed_exact(h: &UniPoly, num: &UniPoly, den: &UniPoly) -> bool {
    let (g, s, _) = den.rem(h).expect("nonzero").xgcd(h);
    if g.deg() != 0 || g.is_zero() {
        return false;
    }
    let x = (&num.rem(h).expect("nonzero") * &s).rem(h).expect("nonzero");
    let mut acc = UniPoly::zero();
    for c in h.coeffs().iter().rev() {
        acc = (&(&acc * &x) + &UniPoly::constant(c.clone())).rem(h).expect("nonzero");
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn modular_division_polynomials_agree() {
        let (a, b) = (rat(-7), rat(11));
        let mut dp = DivPolys::new(&a, &b);
        for n in 1..=13 {
            let exact = reduce(&dp.f(n), 101).unwrap();
            assert_eq!(ff_division_poly(94, 11, n, 101), exact, "n = {n}");
        }
    }
}
