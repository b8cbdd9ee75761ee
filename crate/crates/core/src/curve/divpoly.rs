//! Division polynomials of y^2 = x^3 + A x + B, kept univariate:
//! psi_n = f_n for odd n and psi_n = 2y f_n for even n.

use crate::arith::poly::UniPoly;
use crate::arith::rat::{rat, Rat};

#[derive(Clone, Debug)]
pub struct DivisionPolynomial {
    pub n: u64,
    /// f_n: psi_n for odd n, psi_n / (2y) for even n
    pub poly: UniPoly,
    pub even: bool,
    /// Polynomial whose roots are exactly the x-coordinates of nonzero n-torsion:
    /// f_n for odd n, f_n * (x^3 + A x + B) for even n.
    pub companion: UniPoly,
}

/// Cached table f_0, ..., f_N.
#[derive(Clone, Debug)]
pub struct DivPolys {
    a: Rat,
    b: Rat,
    cubic: UniPoly,
    f: Vec<UniPoly>,
}

impl DivPolys {
    pub fn new(a: &Rat, b: &Rat) -> Self {
        let cubic = UniPoly::new(vec![b.clone(), a.clone(), rat(0), rat(1)]);
        let aa = a * a;
        let f3 = UniPoly::new(vec![-aa.clone(), rat(12) * b, rat(6) * a, rat(0), rat(3)]);
        let f4 = UniPoly::new(vec![
            rat(-8) * b * b - &aa * a,
            rat(-4) * a * b,
            rat(-5) * &aa,
            rat(20) * b,
            rat(5) * a,
            rat(0),
            rat(1),
        ])
        .scale(&rat(2));
        DivPolys {
            a: a.clone(),
            b: b.clone(),
            cubic,
            f: vec![UniPoly::zero(), UniPoly::one(), UniPoly::one(), f3, f4],
        }
    }

    pub fn cubic(&self) -> &UniPoly {
        &self.cubic
    }

    pub fn coefficients(&self) -> (&Rat, &Rat) {
        (&self.a, &self.b)
    }

    /// f_n (see module docs).
    pub fn f(&mut self, n: usize) -> UniPoly {
        while self.f.len() <= n {
            let k = self.f.len();
            let m = k / 2;
            let g = |i: usize| &self.f[i];
            let next = if k % 2 == 1 {
                let f16 = (&self.cubic * &self.cubic).scale(&rat(16));
                let t1 = &(g(m + 2) * g(m)) * &(g(m) * g(m));
                let t2 = &(g(m - 1) * g(m + 1)) * &(g(m + 1) * g(m + 1));
                if m % 2 == 0 {
                    &(&f16 * &t1) - &t2
                } else {
                    &t1 - &(&f16 * &t2)
                }
            } else {
                let inner = &(g(m + 2) * &(g(m - 1) * g(m - 1))) - &(g(m - 2) * &(g(m + 1) * g(m + 1)));
                g(m) * &inner
            };
            self.f.push(next);
        }
        self.f[n].clone()
    }

    pub fn division_polynomial(&mut self, n: u64) -> DivisionPolynomial {
        let poly = self.f(n as usize);
        let even = n % 2 == 0;
        let companion = if even { &poly * &self.cubic } else { poly.clone() };
        DivisionPolynomial { n, poly, even, companion }
    }

    /// (phi_n, psi_n^2) as polynomials in x, so x([n]P) = phi_n(x) / psi_n^2(x).
    pub fn mult_x_formula(&mut self, n: u64) -> (UniPoly, UniPoly) {
        let n = n as usize;
        assert!(n >= 1);
        let fm = self.f(n - 1);
        let fn_ = self.f(n);
        let fp = self.f(n + 1);
        let four_f = self.cubic.scale(&rat(4));
        let x = UniPoly::x();
        if n % 2 == 1 {
            let den = &fn_ * &fn_;
            let num = &(&x * &den) - &(&four_f * &(&fm * &fp));
            (num, den)
        } else {
            let den = &four_f * &(&fn_ * &fn_);
            let num = &(&x * &den) - &(&fm * &fp);
            (num, den)
        }
    }
}

/// Division polynomial of E in short form y^2 = x^3 + A x + B.
pub fn division_polynomial(a: &Rat, b: &Rat, n: u64) -> DivisionPolynomial {
    DivPolys::new(a, b).division_polynomial(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let (a, b) = (rat(2), rat(3));
        assert_eq!(division_polynomial(&a, &b, 1).poly, UniPoly::one());
        let d2 = division_polynomial(&a, &b, 2);
        assert!(d2.even);
        assert_eq!(d2.companion, UniPoly::from_ints(&[3, 2, 0, 1]));
        assert_eq!(division_polynomial(&a, &b, 3).poly, UniPoly::from_ints(&[-4, 36, 12, 0, 3]));
    }

    #[test]
    fn degrees() {
        let mut t = DivPolys::new(&rat(-7), &rat(11));
        for n in (1..=15u64).step_by(2) {
            assert_eq!(t.f(n as usize).deg() as u64, (n * n - 1) / 2);
        }
        for n in (2..=14u64).step_by(2) {
            assert_eq!(t.f(n as usize).deg() as u64, (n * n - 4) / 2);
        }
    }
}
