use std::cmp::Ordering;

use crate::arith::field::FieldElem;
use crate::arith::numfield::{nf_roots, nf_sqrt, Field, NFElement, NFPoly};
use crate::arith::poly::UniPoly;
use crate::arith::rat::Rat;
use crate::curve::divpoly::DivPolys;
use crate::curve::model::{EllipticCurveQ, GroupShape};
use crate::curve::point::{CurveOver, CurvePoint};
use crate::error::Result;

pub type Point = CurvePoint<NFElement>;

/// E over a number field, carried in short form with the map back to the input model.
pub struct ShortCurve {
    pub field: Field,
    pub curve: CurveOver<NFElement>,
    pub long: CurveOver<NFElement>,
    pub divpolys: DivPolys,
    shift: NFElement,
    a1: NFElement,
    a3: NFElement,
}

impl ShortCurve {
    pub fn new(e: &EllipticCurveQ, field: &Field) -> Self {
        let (a, b) = e.short_form();
        let c = |r: &Rat| NFElement::from_rat(field, r.clone());
        ShortCurve {
            field: field.clone(),
            curve: CurveOver::short(c(&a), c(&b)),
            long: CurveOver {
                a1: c(e.a1()),
                a2: c(e.a2()),
                a3: c(e.a3()),
                a4: c(e.a4()),
                a6: c(e.a6()),
            },
            divpolys: DivPolys::new(&a, &b),
            shift: c(&e.short_shift()),
            a1: c(e.a1()),
            a3: c(e.a3()),
        }
    }

    fn cubic_at(&self, x: &NFElement) -> NFElement {
        let c = &self.curve;
        x.square().mul(x).add(&c.a4.mul(x)).add(&c.a6)
    }

    /// Points of the short model with the given x-coordinate.
    fn lift(&self, x: &NFElement) -> Vec<Point> {
        match nf_sqrt(&self.cubic_at(x)) {
            None => vec![],
            Some(y) if y.is_zero() => vec![Point::affine(x.clone(), y)],
            Some(y) => vec![Point::affine(x.clone(), y.neg()), Point::affine(x.clone(), y)],
        }
    }

    /// Short-model point to the input long model: x = X - b2/12, y = Y - (a1 x + a3) / 2.
    pub fn to_long(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let lx = x.sub(&self.shift);
                let ly = y.sub(&self.a1.mul(&lx).add(&self.a3).mul(&x.small(2).inv().unwrap()));
                Point::affine(lx, ly)
            }
        }
    }

    fn rational_poly_roots(&self, f: &UniPoly) -> Result<Vec<NFElement>> {
        nf_roots(&self.field, &NFPoly::from_rational(&self.field, f))
    }

    /// Nonzero points of E(F)[q] in the short model.
    fn q_torsion(&mut self, q: u64) -> Result<Vec<Point>> {
        let poly = if q == 2 { self.divpolys.cubic().clone() } else { self.divpolys.f(q as usize) };
        let mut pts = Vec::new();
        for x in self.rational_poly_roots(&poly)? {
            pts.extend(self.lift(&x));
        }
        Ok(pts)
    }

    /// All Q with [q]Q = +-P.
    fn divide(&mut self, p: &Point, q: u64) -> Result<Vec<Point>> {
        let Some(xp) = p.x() else { return Ok(vec![]) };
        let (num, den) = self.divpolys.mult_x_formula(q);
        let n = num.deg().max(den.deg());
        let coeffs = (0..=n)
            .map(|i| {
                let c = |r: Rat| NFElement::from_rat(&self.field, r);
                c(num.coeff(i)).sub(&xp.mul(&c(den.coeff(i))))
            })
            .collect();
        let g = NFPoly::new(&self.field, coeffs);
        let mut out = Vec::new();
        for x in nf_roots(&self.field, &g)? {
            out.extend(self.lift(&x));
        }
        Ok(out)
    }
}

/// The q-primary subgroup found: shape and every element (input-model coordinates).
#[derive(Clone, Debug)]
pub struct QPrimary {
    pub q: u64,
    pub shape: GroupShape,
    pub points: Vec<Point>,
}

/// E(F)[q^oo], assuming its order divides q^max_exp.
pub(crate) fn q_primary(sc: &mut ShortCurve, q: u64, max_exp: u32) -> Result<QPrimary> {
    let mut group: Vec<Point> = vec![Point::Infinity];
    let trivial = |sc: &ShortCurve, group: Vec<Point>| QPrimary { q, shape: GroupShape::trivial(), points: group.iter().map(|p| sc.to_long(p)).collect() };
    if max_exp == 0 {
        return Ok(trivial(sc, group));
    }
    group.extend(sc.q_torsion(q)?);
    if group.len() == 1 {
        return Ok(trivial(sc, group));
    }
    let cap = q.pow(max_exp);
    // frontier: points of exact order q^k
    let mut frontier: Vec<Point> = group[1..].to_vec();
    loop {
        if group.len() as u64 * q > cap {
            break;
        }
        let mut fresh: Vec<Point> = Vec::new();
        let mut seen_x: Vec<NFElement> = Vec::new();
        for p in &frontier {
            let x = p.x().unwrap();
            if seen_x.contains(x) {
                continue;
            }
            seen_x.push(x.clone());
            for r in sc.divide(p, q)? {
                if !group.contains(&r) && !fresh.contains(&r) {
                    fresh.push(r);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        group.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    let total = (group.len() as u64).ilog(q);
    let c = &sc.curve;
    let big = group.iter().map(|p| point_order_exp(c, p, q)).max().unwrap();
    let shape = GroupShape::new(q.pow(total - big), q.pow(big))?;
    let points = group.iter().map(|p| sc.to_long(p)).collect();
    Ok(QPrimary { q, shape, points })
}

/// k with ord(P) = q^k.
fn point_order_exp(c: &CurveOver<NFElement>, p: &Point, q: u64) -> u32 {
    let mut k = 0;
    let mut cur = p.clone();
    while !cur.is_infinity() {
        cur = c.mul(&cur, q as i64);
        k += 1;
    }
    k
}

pub fn cmp_points(a: &Point, b: &Point) -> Ordering {
    match (a, b) {
        (Point::Infinity, Point::Infinity) => Ordering::Equal,
        (Point::Infinity, _) => Ordering::Less,
        (_, Point::Infinity) => Ordering::Greater,
        (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => {
            x1.coords().cmp(x2.coords()).then_with(|| y1.coords().cmp(y2.coords()))
        }
    }
}
