//! Arithmetic properties checked with proptest's runner so that both the
//! property suite and the acceptance binary can drive them.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use zptorsion::arith::factor::poly_factor_rationals;
use zptorsion::arith::numfield::{rationals, NFElement};
use zptorsion::arith::poly::UniPoly;
use zptorsion::arith::rat::{is_prime, rat};
use zptorsion::classifier::shipped_corpus;
use zptorsion::curve::count::reduce_and_count;
use zptorsion::curve::divpoly::DivPolys;
use zptorsion::curve::model::EllipticCurveQ;
use zptorsion::curve::point::{point_mul, CurvePoint};
use zptorsion::isogeny::{kernel_candidates, velu_isogeny};

pub type Check = fn(u32) -> Result<(), String>;

pub const ALL: [(&str, Check); 5] = [
    ("factorization re-expansion", factorization),
    ("division polynomial degrees", divpoly_degrees),
    ("x([n]P) identity", mult_x_formula),
    ("Hasse bound", hasse),
    ("Velu point counts", velu),
];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    (1..=max_deg)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), 1i64..=5))
        .prop_map(|(mut cs, lead)| {
            cs.push(lead);
            UniPoly::from_ints(&cs)
        })
}

fn primes_below(n: u64) -> impl Iterator<Item = u64> {
    (3..n).filter(|&l| is_prime(l))
}

pub fn factorization(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&prop::collection::vec(small_poly(3), 1..=3), |fs| {
            let f = fs.iter().fold(UniPoly::one(), |acc, g| &acc * g);
            let parts = poly_factor_rationals(&f).unwrap();
            let mut back = UniPoly::constant(f.lead());
            for (g, m) in &parts {
                prop_assert!(g.is_monic());
                back = &back * &g.pow(*m as u32);
            }
            prop_assert_eq!(back, f);
            let count: usize = parts.iter().map(|(_, m)| m).sum();
            prop_assert!(count >= fs.len());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn divpoly_degrees(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(-20i64..=20, -20i64..=20), |(a, b)| {
            prop_assume!(4 * a * a * a + 27 * b * b != 0);
            let mut dp = DivPolys::new(&rat(a), &rat(b));
            for n in 2u64..=15 {
                let f = dp.f(n as usize);
                let (deg, lead) = if n % 2 == 1 { ((n * n - 1) / 2, n) } else { ((n * n - 4) / 2, n / 2) };
                prop_assert_eq!(f.deg() as u64, deg, "n = {}", n);
                prop_assert_eq!(f.lead(), rat(lead as i64));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn mult_x_formula(cases: u32) -> Result<(), String> {
    // curves through a chosen point (x0, y0)
    runner(cases)
        .run(&(-6i64..=6, 1i64..=6, -6i64..=6), |(x0, y0, a)| {
            let b = y0 * y0 - x0 * x0 * x0 - a * x0;
            prop_assume!(4 * a * a * a + 27 * b * b != 0);
            let e = EllipticCurveQ::from_ints([0, 0, 0, a, b]).unwrap();
            let k = rationals();
            let p = CurvePoint::affine(NFElement::from_rat(&k, rat(x0)), NFElement::from_rat(&k, rat(y0)));
            let mut dp = DivPolys::new(&rat(a), &rat(b));
            for n in 1..=10u64 {
                let (num, den) = dp.mult_x_formula(n);
                let q = point_mul(&e, &p, n as i64).unwrap();
                let d = den.eval(&rat(x0));
                match q.x() {
                    None => prop_assert!(d == rat(0)),
                    Some(x) => {
                        prop_assert!(d != rat(0));
                        prop_assert_eq!(x.as_rational().unwrap(), num.eval(&rat(x0)) / d);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn hasse(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&prop::array::uniform5(-5i64..=5), |a| {
            let Ok(e) = EllipticCurveQ::from_ints(a) else { return Ok(()) };
            for l in primes_below(120).filter(|&l| e.is_good_prime(l)) {
                let n = reduce_and_count(&e, l).unwrap() as i64;
                let t = l as i64 + 1 - n;
                prop_assert!(t * t <= 4 * l as i64, "l = {}, #E = {}", l, n);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn same_counts(e: &EllipticCurveQ, e1: &EllipticCurveQ, bound: u64) -> Result<(), String> {
    for l in primes_below(bound).filter(|&l| e.is_good_prime(l) && e1.is_good_prime(l)) {
        let (n, n1) = (reduce_and_count(e, l).map_err(|x| x.to_string())?, reduce_and_count(e1, l).map_err(|x| x.to_string())?);
        if n != n1 {
            return Err(format!("#E(F_{l}) = {n} but the isogenous curve has {n1}"));
        }
    }
    Ok(())
}

/// Random 2-isogenies from y^2 = x (x^2 + a x + b), then fixture curves with
/// odd prime degree isogenies.
pub fn velu(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(-8i64..=8, -8i64..=8), |(a, b)| {
            prop_assume!(b != 0 && a * a - 4 * b != 0);
            let e = EllipticCurveQ::from_ints([0, a, 0, b, 0]).unwrap();
            let ks = kernel_candidates(&e, 2);
            prop_assert!(!ks.is_empty());
            for h in &ks {
                let e1 = velu_isogeny(&e, h).unwrap();
                same_counts(&e, &e1, 60).map_err(TestCaseError::fail)?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let corpus = shipped_corpus();
    for (label, n) in [("19a1", 3), ("11a1", 5), ("14a1", 2), ("14a1", 3), ("26b1", 7), ("121b1", 11)] {
        let e = corpus.get(label).ok_or(format!("{label} missing"))?.curve();
        let ks = kernel_candidates(&e, n);
        if ks.is_empty() {
            return Err(format!("{label} should have a {n}-isogeny"));
        }
        for h in &ks {
            let e1 = velu_isogeny(&e, h).map_err(|x| x.to_string())?;
            same_counts(&e, &e1, 80).map_err(|m| format!("{label}, degree {n}: {m}"))?;
        }
    }
    Ok(())
}
