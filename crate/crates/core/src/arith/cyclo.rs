//! Cyclotomic polynomials and minimal polynomials of zeta + 1/zeta.

use super::numfield::interpolate;
use super::poly::UniPoly;
use super::rat::{divisors, euler_phi, rat, Rat};
use super::resultant::resultant;
use crate::error::{Error, Result};

pub fn cyclotomic_poly(n: u64) -> UniPoly {
    let mut f = UniPoly::monomial(rat(1), n as usize);
    f = &f - &UniPoly::one();
    for d in divisors(n) {
        if d < n {
            f = f.exact_div(&cyclotomic_poly(d)).expect("Phi_d divides x^n - 1");
        }
    }
    f
}

/// Minimal polynomial of zeta_n + zeta_n^-1 (degree phi(n)/2).
pub fn cyclotomic_real_minpoly(n: u64) -> Result<UniPoly> {
    if n < 3 {
        return Err(Error::CyclotomicIndex(n));
    }
    let phi = cyclotomic_poly(n);
    let m = euler_phi(n) as i64;
    // Res_z(Phi_n(z), z^2 - t z + 1) = P(t)^2 with P the wanted minimal polynomial
    let xs: Vec<Rat> = (0..=m).map(rat).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|t| {
            let q = UniPoly::new(vec![rat(1), -t.clone(), rat(1)]);
            resultant(&phi, &q).expect("nonzero")
        })
        .collect();
    let sq = interpolate(&xs, &ys);
    let g = sq.gcd(&sq.derivative());
    Ok(sq.exact_div(&g).expect("gcd divides").monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic_real_minpoly(3).unwrap(), UniPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_real_minpoly(5).unwrap(), UniPoly::from_ints(&[-1, 1, 1]));
        assert_eq!(cyclotomic_real_minpoly(7).unwrap(), UniPoly::from_ints(&[-1, -2, 1, 1]));
        assert_eq!(cyclotomic_real_minpoly(9).unwrap(), UniPoly::from_ints(&[1, -3, 0, 1]));
        assert!(cyclotomic_real_minpoly(2).is_err());
        assert_eq!(cyclotomic_poly(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
    }
}
