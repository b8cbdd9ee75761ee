use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::ffpoly::{factor_degrees, FFPoly};
use crate::arith::numfield::NumberField;
use crate::arith::rat::{big_mod_u64, is_prime, rat_mod};
use crate::curve::count::{count_extension, reduce_and_count};
use crate::curve::model::EllipticCurveQ;
use crate::error::{Error, Result};

use super::TorsionConfig;

/// A prime usable for reduction, with the residue degrees of the field above it.
#[derive(Clone, Debug)]
pub struct ReductionPrime {
    pub l: u64,
    pub residue_degrees: Vec<usize>,
    pub count: u64,
}

/// The first `cfg.primes` primes l >= 3 of good reduction for E that are
/// unramified in the field and do not divide the index of its power basis.
pub fn reduction_primes(e: &EllipticCurveQ, field: &NumberField, cfg: &TorsionConfig) -> Result<Vec<ReductionPrime>> {
    let f = field.defining_poly();
    let disc = if f.deg() > 1 { f.discriminant() } else { num_rational::BigRational::from_integer(1.into()) };
    let mut out = Vec::new();
    let mut l = 3;
    while l <= cfg.prime_cap && out.len() < cfg.primes {
        if is_prime(l) && e.is_good_prime(l) && big_mod_u64(disc.numer(), l) != 0 {
            let coeffs: Option<Vec<u64>> = f.coeffs().iter().map(|c| rat_mod(c, l)).collect();
            if let Some(c) = coeffs {
                let degs = factor_degrees(&FFPoly::new(l, c));
                let count = reduce_and_count(e, l)?;
                out.push(ReductionPrime { l, residue_degrees: degs, count });
            }
        }
        l += 2;
    }
    if out.len() < cfg.primes {
        return Err(Error::InsufficientPrimes { found: out.len(), cap: cfg.prime_cap });
    }
    Ok(out)
}

/// gcd of #E(F_{l^f}) over the residue fields of the chosen primes: a multiple of |E(F)_tors|.
pub fn torsion_bound_with(e: &EllipticCurveQ, field: &NumberField, cfg: &TorsionConfig) -> Result<u64> {
    let mut g = BigInt::zero();
    for rp in reduction_primes(e, field, cfg)? {
        for &f in &rp.residue_degrees {
            g = g.gcd(&count_extension(rp.l, rp.count, f as u32));
        }
    }
    g.to_u64().ok_or_else(|| Error::InsufficientPrimes { found: cfg.primes, cap: cfg.prime_cap })
}

pub fn torsion_bound_by_reduction(e: &EllipticCurveQ, field: &NumberField) -> Result<u64> {
    torsion_bound_with(e, field, &TorsionConfig::default())
}
