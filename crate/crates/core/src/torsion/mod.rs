//! E(F)_tors by reduction bounds plus division-polynomial root finding.

mod primary;
mod reduction;

pub use primary::{cmp_points, Point, QPrimary, ShortCurve};
pub use reduction::{reduction_primes, torsion_bound_by_reduction, torsion_bound_with, ReductionPrime};

use crate::arith::numfield::Field;
use crate::arith::rat::factor_u64;
use crate::curve::model::{vp, EllipticCurveQ, GroupShape};
use crate::curve::point::CurveOver;
use crate::arith::numfield::NFElement;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TorsionConfig {
    /// number of reduction primes
    pub primes: usize,
    /// largest reduction prime tried
    pub prime_cap: u64,
    /// largest field degree accepted
    pub degree_cap: usize,
}

impl Default for TorsionConfig {
    fn default() -> Self {
        TorsionConfig { primes: 8, prime_cap: 1000, degree_cap: 14 }
    }
}

#[derive(Clone, Debug)]
pub struct TorsionResult {
    pub shape: GroupShape,
    /// one generator per invariant factor > 1, input-model coordinates
    pub generators: Vec<Point>,
    pub field: Field,
}

fn check_degree(field: &Field, cfg: &TorsionConfig) -> Result<()> {
    if field.degree() > cfg.degree_cap {
        return Err(Error::FieldTooLarge { degree: field.degree(), cap: cfg.degree_cap });
    }
    Ok(())
}

/// The q-primary part of E(F)_tors with all its points.
pub fn q_primary_torsion(e: &EllipticCurveQ, field: &Field, q: u64) -> Result<QPrimary> {
    let cfg = TorsionConfig::default();
    check_degree(field, &cfg)?;
    let bound = torsion_bound_with(e, field, &cfg)?;
    let mut sc = ShortCurve::new(e, field);
    primary::q_primary(&mut sc, q, vp(bound, q))
}

pub fn torsion_over_field(e: &EllipticCurveQ, field: &Field) -> Result<TorsionResult> {
    torsion_over_field_with(e, field, &TorsionConfig::default())
}

pub fn torsion_over_field_with(e: &EllipticCurveQ, field: &Field, cfg: &TorsionConfig) -> Result<TorsionResult> {
    check_degree(field, cfg)?;
    let bound = torsion_bound_with(e, field, cfg)?;
    let mut sc = ShortCurve::new(e, field);
    let mut shape = GroupShape::trivial();
    let mut elements: Vec<Point> = vec![Point::Infinity];
    for (q, k) in factor_u64(bound) {
        let part = primary::q_primary(&mut sc, q, k)?;
        if part.points.len() == 1 {
            continue;
        }
        shape = shape * part.shape;
        let mut next = Vec::with_capacity(elements.len() * part.points.len());
        for a in &elements {
            for b in &part.points {
                next.push(sc.long.add(a, b));
            }
        }
        elements = next;
    }
    let generators = choose_generators(&sc.long, &elements, shape);
    Ok(TorsionResult { shape, generators, field: field.clone() })
}

/// Smallest point of order b, then (if a > 1) the smallest point of order a
/// meeting the first cyclic subgroup trivially.
fn choose_generators(c: &CurveOver<NFElement>, elements: &[Point], shape: GroupShape) -> Vec<Point> {
    let mut sorted = elements.to_vec();
    sorted.sort_by(cmp_points);
    let order = |p: &Point| c.order(p, shape.order()).unwrap_or(0);
    let mut gens = Vec::new();
    if shape.b() == 1 {
        return gens;
    }
    let g1 = sorted.iter().find(|p| order(p) == shape.b()).cloned().expect("group realizes its exponent");
    if shape.a() > 1 {
        let span: Vec<Point> = (0..shape.b()).map(|k| c.mul(&g1, k as i64)).collect();
        let g2 = sorted
            .iter()
            .find(|p| {
                order(p) == shape.a()
                    && factor_u64(shape.a()).iter().all(|&(q, _)| !span.contains(&c.mul(p, (shape.a() / q) as i64)))
            })
            .cloned()
            .expect("complement exists");
        gens.push(g1);
        gens.push(g2);
    } else {
        gens.push(g1);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::numfield::{quadratic_field, rationals};

    #[test]
    fn rational_examples() {
        let q = rationals();
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        let t = torsion_over_field(&e, &q).unwrap();
        assert_eq!(t.shape, GroupShape::cyclic(2));
        assert_eq!(t.generators[0].x().unwrap().as_rational().unwrap(), crate::arith::rat::rat(0));
        let e = EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap();
        assert_eq!(torsion_over_field(&e, &q).unwrap().shape, GroupShape::cyclic(6));
        assert_eq!(q_primary_torsion(&e, &q, 3).unwrap().shape, GroupShape::cyclic(3));
        // 11a3: y^2 + y = x^3 - x^2
        let e = EllipticCurveQ::from_ints([0, -1, 1, 0, 0]).unwrap();
        assert_eq!(torsion_over_field(&e, &q).unwrap().shape, GroupShape::cyclic(5));
    }

    #[test]
    fn full_two_torsion_and_generators() {
        // y^2 = x^3 - x has Z/2 x Z/2 over Q and Z/2 x Z/4 over Q(i)
        let e = EllipticCurveQ::from_ints([0, 0, 0, -1, 0]).unwrap();
        assert_eq!(torsion_over_field(&e, &rationals()).unwrap().shape, GroupShape::new(2, 2).unwrap());
        let t = torsion_over_field(&e, &quadratic_field(-1).unwrap()).unwrap();
        assert_eq!(t.shape, GroupShape::new(2, 4).unwrap());
        assert_eq!(t.generators.len(), 2);
    }

    #[test]
    fn bound_is_a_multiple() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        assert_eq!(torsion_bound_by_reduction(&e, &rationals()).unwrap() % 2, 0);
    }
}
