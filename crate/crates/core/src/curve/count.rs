use num_bigint::BigInt;
use num_traits::One;

use crate::arith::ffpoly::legendre;
use crate::arith::rat::{rat_mod, Rat};
use crate::error::{Error, Result};

use super::model::EllipticCurveQ;

/// #E(F_l) by enumerating x and testing 4x^3 + b2 x^2 + 2 b4 x + b6 for squares.
pub fn reduce_and_count(e: &EllipticCurveQ, l: u64) -> Result<u64> {
    if !e.is_good_prime(l) {
        return Err(Error::BadPrime(l));
    }
    let red = |r: Rat| rat_mod(&r, l).ok_or(Error::BadPrime(l));
    let (b2, b4, b6) = (red(e.b2())?, red(e.b4())?, red(e.b6())?);
    let mut total: i64 = l as i64 + 1;
    for x in 0..l {
        let x2 = x * x % l;
        let v = (4 * x2 % l * x % l + b2 * x2 % l + 2 * b4 % l * x % l + b6) % l;
        total += legendre(v, l);
    }
    Ok(total as u64)
}

/// #E(F_{l^f}) from a_l = l + 1 - #E(F_l) via s_{k+1} = a s_k - l s_{k-1}.
pub fn count_extension(l: u64, count_fl: u64, f: u32) -> BigInt {
    let a = BigInt::from(l as i64 + 1 - count_fl as i64);
    let lb = BigInt::from(l);
    let (mut s0, mut s1) = (BigInt::from(2), a.clone());
    for _ in 1..f {
        let s2 = &a * &s1 - &lb * &s0;
        s0 = s1;
        s1 = s2;
    }
    num_traits::pow(lb, f as usize) + BigInt::one() - s1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 1, 0]).unwrap();
        assert_eq!(reduce_and_count(&e, 3).unwrap(), 4);
        let e = EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap();
        assert_eq!(reduce_and_count(&e, 5).unwrap(), 6);
        assert!(reduce_and_count(&e, 3).is_err());
        assert!(reduce_and_count(&e, 2).is_err());
    }

    #[test]
    fn extension_counts() {
        // y^2 = x^3 + x over F_9: a_3 = 0, so #E(F_9) = 9 + 1 + 2*3 = 16
        assert_eq!(count_extension(3, 4, 2), BigInt::from(16));
        assert_eq!(count_extension(3, 4, 1), BigInt::from(4));
    }
}
