#![allow(dead_code)]

pub mod props;

use zptorsion::tower::TowerSpec;

pub const DS: [i64; 9] = [1, -1, 2, -2, 3, -3, 5, -6, -15];
pub const PS: [u64; 5] = [3, 5, 7, 11, 13];

pub fn grid() -> Vec<TowerSpec> {
    let mut out = vec![];
    for d in DS {
        for p in PS {
            if let Ok(s) = TowerSpec::cyclotomic(d, p) {
                out.push(s);
            }
            if let Ok(s) = TowerSpec::anticyclotomic(d, p) {
                out.push(s);
            }
        }
    }
    out
}

pub fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut q = 2;
    while q * q <= n {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        if e > 0 {
            out.push((q, e));
        }
        q += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn phi(n: u64) -> u64 {
    factor_small(n).iter().map(|&(q, e)| (q - 1) * q.pow(e - 1)).product()
}

// Q(zeta_n) sits in L iff its Galois group is a quotient of Gal(L/Q): order 2^e p^a with
// e <= 1 (a = 0 unless the tower is abelian over Q), its quadratic subfield is K when
// e = 1, and nothing outside p and ram(K) ramifies.
pub fn mu_oracle(s: &TowerSpec, n: u64) -> bool {
    let mut m = phi(n);
    let mut a = 0;
    while m % s.p == 0 {
        m /= s.p;
        a += 1;
    }
    if m > 2 || (a > 0 && !s.is_cyclotomic()) {
        return false;
    }
    let disc = if s.d.rem_euclid(4) == 1 { s.d.unsigned_abs() } else { 4 * s.d.unsigned_abs() };
    if m == 2 && n % disc != 0 {
        return false;
    }
    factor_small(n).iter().all(|&(q, e)| q == s.p || (q - 1) * q.pow(e - 1) <= 2)
}
