use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Resultant via the Euclidean remainder sequence.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = Rat::one();
    loop {
        let (m, n) = (a.deg(), b.deg());
        if n == 0 {
            return Ok(acc * pow(&b.lead(), m));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(Rat::zero());
        }
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(&b.lead(), m - r.deg());
        a = b;
        b = r;
    }
}

fn pow(c: &Rat, e: usize) -> Rat {
    num_traits::pow(c.clone(), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn examples() {
        let g = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(resultant(&UniPoly::from_ints(&[-2, 1]), &g).unwrap(), rat(5));
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[-3, 0, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat(1));
        assert_eq!(resultant(&a, &UniPoly::one()).unwrap(), rat(1));
        assert!(resultant(&a, &UniPoly::zero()).is_err());
    }

    #[test]
    fn common_root_gives_zero() {
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat(0));
    }
}
