//! Rational cyclic isogenies: kernel polynomials, Velu codomains, and
//! table lookups for the degrees realized by finitely many j-invariants.

pub mod kernel;
pub mod velu;

use std::sync::OnceLock;

pub use kernel::{kernel_candidates, KernelPolynomial};
pub use velu::velu_isogeny;

use crate::arith::factor::{poly_factor_rationals, rational_roots};
use crate::arith::rat::{factor_u64, rat, Rat};
use crate::curve::model::EllipticCurveQ;
use crate::error::{Error, Result};
use crate::lmfdb::Corpus;
use crate::tower::fingerprint::FieldFingerprint;

/// Degrees that only finitely many j-invariants realize; answered from fixtures.
pub const TABLE_DEGREES: [u64; 8] = [17, 19, 21, 27, 37, 43, 67, 163];

/// Degrees of rational cyclic isogenies that occur at all over Q.
pub fn is_admissible_degree(n: u64) -> bool {
    (1..=19).contains(&n) || [21, 25, 27, 37, 43, 67, 163].contains(&n)
}

fn shipped() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(Corpus::shipped)
}

pub fn has_rational_cyclic_isogeny(e: &EllipticCurveQ, n: u64) -> Result<bool> {
    has_rational_cyclic_isogeny_in(shipped(), e, n)
}

/// As `has_rational_cyclic_isogeny`, with table lookups against `corpus`.
pub fn has_rational_cyclic_isogeny_in(corpus: &Corpus, e: &EllipticCurveQ, n: u64) -> Result<bool> {
    if !is_admissible_degree(n) {
        return Err(Error::DegreeExcluded(n));
    }
    if n == 1 {
        return Ok(true);
    }
    if TABLE_DEGREES.contains(&n) {
        let j = e.j_invariant();
        return Ok(corpus.records.iter().any(|r| r.j == j && r.has_isogeny(n)));
    }
    for (q, k) in factor_u64(n) {
        let ok = match (q, k) {
            (2, k) => two_power_walk(e, k),
            (q, 1) => !kernel_candidates(e, q).is_empty(),
            (q, 2) => kernel_candidates(e, q).iter().any(|h| {
                velu_isogeny(e, h).is_ok_and(|e1| kernel_candidates(&e1, q).len() >= 2)
            }),
            _ => return Err(Error::DegreeExcluded(n)),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A non-backtracking path of k rational 2-isogenies. On the codomain of the
/// isogeny with kernel root r the dual kernel root is -2r.
fn two_power_walk(e: &EllipticCurveQ, k: u32) -> bool {
    fn go(a: &Rat, b: &Rat, forbidden: Option<&Rat>, k: u32) -> bool {
        if k == 0 {
            return true;
        }
        let cubic = crate::arith::poly::UniPoly::new(vec![b.clone(), a.clone(), rat(0), rat(1)]);
        rational_roots(&cubic).into_iter().filter(|r| Some(r) != forbidden).any(|r| {
            let t = rat(3) * &r * &r + a;
            let w = &r * &t;
            let (a1, b1) = (a - rat(5) * &t, b - rat(7) * &w);
            go(&a1, &b1, Some(&(rat(-2) * &r)), k - 1)
        })
    }
    let (a, b) = e.short_form();
    go(&a, &b, None, k)
}

/// Fingerprints of the kernel-point x-fields stored for E's j-invariant.
pub fn kernel_fingerprints_in(corpus: &Corpus, e: &EllipticCurveQ, n: u64) -> Option<Vec<FieldFingerprint>> {
    let j = e.j_invariant();
    corpus.records.iter().find(|r| r.j == j && r.kernel_fields.contains_key(&n)).map(|r| r.kernel_fields[&n].clone())
}

pub fn kernel_field_degrees(e: &EllipticCurveQ, n: u64) -> Result<Vec<u64>> {
    kernel_field_degrees_in(shipped(), e, n)
}

/// Degrees of the irreducible factors of the kernel polynomials (sorted,
/// with multiplicity); fixture data for table-driven degrees.
pub fn kernel_field_degrees_in(corpus: &Corpus, e: &EllipticCurveQ, n: u64) -> Result<Vec<u64>> {
    if !has_rational_cyclic_isogeny_in(corpus, e, n)? {
        return Err(Error::NoIsogeny(n));
    }
    let mut out: Vec<u64> = if TABLE_DEGREES.contains(&n) {
        kernel_fingerprints_in(corpus, e, n)
            .ok_or_else(|| Error::MissingFact(format!("kernel field data for {n}-isogeny")))?
            .iter()
            .map(|f| f.degree)
            .collect()
    } else if n == 2 || crate::arith::rat::is_prime(n) {
        let mut v = Vec::new();
        for h in kernel_candidates(e, n) {
            for (g, _) in poly_factor_rationals(&h.poly)? {
                v.push(g.deg() as u64);
            }
        }
        v
    } else {
        return Err(Error::MissingFact(format!("kernel polynomial for composite degree {n}")));
    };
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_isogeny_of_x3_plus_x() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        let ks = kernel_candidates(&e, 2);
        assert_eq!(ks.len(), 1);
        let e2 = velu_isogeny(&e, &ks[0]).unwrap();
        // E: y^2 = x(x^2 + a x + b) -> y^2 = x(x^2 - 2a x + a^2 - 4b)
        assert_eq!(e2.short_form(), (rat(-4), rat(0)));
        assert!(has_rational_cyclic_isogeny(&e, 2).unwrap());
        assert!(has_rational_cyclic_isogeny(&e, 4).unwrap());
        assert!(matches!(has_rational_cyclic_isogeny(&e, 23), Err(Error::DegreeExcluded(23))));
    }

    #[test]
    fn three_isogeny_brute_force() {
        // every linear factor of psi_3 passing the closure check is a kernel
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        let (a, b) = e.short_form();
        let psi = crate::curve::divpoly::division_polynomial(&a, &b, 3).poly;
        let linear = rational_roots(&psi).len();
        assert_eq!(kernel_candidates(&e, 3).len(), linear);
    }
}
