use crate::arith::poly::UniPoly;
use crate::arith::rat::{rat, Rat};
use crate::curve::model::EllipticCurveQ;
use crate::error::{Error, Result};

use super::kernel::{is_kernel, KernelPolynomial};
use crate::curve::divpoly::DivPolys;

/// Codomain y^2 = x^3 + A' x + B' of the isogeny with kernel polynomial h
/// (short-model x) from Kohel's form of Velu's formulas.
pub(crate) fn velu_codomain(e: &EllipticCurveQ, h: &UniPoly, n: u64) -> Result<EllipticCurveQ> {
    let (a, b) = e.short_form();
    let (t, w) = if n % 2 == 0 {
        if n != 2 || h.deg() != 1 {
            return Err(Error::NotKernelPolynomial);
        }
        let r = -h.coeff(0);
        let t = rat(3) * &r * &r + &a;
        let w = &r * &t;
        (t, w)
    } else {
        let d = h.deg();
        if d as u64 != (n - 1) / 2 || !h.is_monic() {
            return Err(Error::NotKernelPolynomial);
        }
        // h = x^d - s1 x^(d-1) + s2 x^(d-2) - s3 x^(d-3) ...
        let s = |i: usize| -> Rat {
            if i > d {
                return rat(0);
            }
            let c = h.coeff(d - i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        };
        let (s1, s2, s3) = (s(1), s(2), s(3));
        let dd = rat(d as i64);
        let t = rat(6) * (&s1 * &s1 - rat(2) * &s2) + rat(2) * &dd * &a;
        let w = rat(10) * (&s1 * &s1 * &s1 - rat(3) * &s1 * &s2 + rat(3) * &s3) + rat(6) * &a * &s1 + rat(4) * &dd * &b;
        (t, w)
    };
    EllipticCurveQ::short(&a - rat(5) * &t, &b - rat(7) * &w).map_err(|_| Error::NotKernelPolynomial)
}

/// Codomain of the isogeny with the given kernel, after re-checking the kernel.
pub fn velu_isogeny(e: &EllipticCurveQ, h: &KernelPolynomial) -> Result<EllipticCurveQ> {
    let (a, b) = e.short_form();
    let mut dp = DivPolys::new(&a, &b);
    let psi = if h.n == 2 { dp.cubic().clone() } else { dp.f(h.n as usize) };
    if h.n < 2 || psi.rem(&h.poly).map_or(true, |r| !r.is_zero()) {
        return Err(Error::NotKernelPolynomial);
    }
    if h.n > 2 && !is_kernel(&mut dp, e, &h.poly, h.n) {
        return Err(Error::NotKernelPolynomial);
    }
    velu_codomain(e, &h.poly, h.n)
}
