//! Text input: Weierstrass coefficients, polynomials, tower specs.

use num_traits::{One, Zero};

use crate::arith::poly::UniPoly;
use crate::arith::rat::{parse_rat, Rat};
use crate::curve::model::EllipticCurveQ;
use crate::error::{Error, Result};
use crate::tower::spec::{TowerKind, TowerSpec};

fn strip_brackets(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t)
}

fn split_list(s: &str) -> Vec<&str> {
    strip_brackets(s)
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect()
}

/// `[a1,a2,a3,a4,a6]`, or `[a4,a6]` for a short model. Entries may be fractions.
pub fn parse_ainvs(s: &str) -> Result<[Rat; 5]> {
    let vals = split_list(s).into_iter().map(parse_rat).collect::<Result<Vec<_>>>()?;
    match vals.len() {
        5 => Ok(vals.try_into().expect("five entries")),
        2 => {
            let z = Rat::zero();
            Ok([z.clone(), z.clone(), z, vals[0].clone(), vals[1].clone()])
        }
        k => Err(Error::Parse(format!("expected 2 or 5 coefficients, got {k}"))),
    }
}

pub fn parse_curve(s: &str) -> Result<EllipticCurveQ> {
    EllipticCurveQ::new(parse_ainvs(s)?)
}

/// A polynomial in x, either as a bracketed coefficient list (lowest degree first)
/// or as an expression such as `x^3 - 3*x + 1`.
pub fn parse_poly(s: &str) -> Result<UniPoly> {
    let t = s.trim();
    if t.starts_with('[') {
        let cs = split_list(t).into_iter().map(parse_rat).collect::<Result<Vec<_>>>()?;
        return Ok(UniPoly::new(cs));
    }
    parse_poly_expr(t)
}

const MAX_EXPR_DEGREE: usize = 4096;

fn parse_poly_expr(s: &str) -> Result<UniPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(bool, &str)> = vec![];
    let mut start = 0;
    let mut neg = false;
    let bytes = compact.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > start {
            // a sign right after '^' or '/' belongs to the number
            if matches!(bytes[i - 1], b'^' | b'/' | b'*') {
                continue;
            }
            terms.push((neg, &compact[start..i]));
            neg = b == b'-';
            start = i + 1;
        } else if (b == b'+' || b == b'-') && i == start {
            neg ^= b == b'-';
            start = i + 1;
        }
    }
    terms.push((neg, &compact[start..]));
    let mut acc = UniPoly::zero();
    for (neg, t) in terms {
        let (c, e) = parse_term(t)?;
        let c = if neg { -c } else { c };
        acc = &acc + &UniPoly::monomial(c, e);
    }
    Ok(acc)
}

fn parse_term(t: &str) -> Result<(Rat, usize)> {
    if t.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let Some(pos) = t.find('x') else {
        return Ok((parse_rat(t)?, 0));
    };
    let coeff = match t[..pos].strip_suffix('*') {
        Some(c) => parse_rat(c)?,
        None if pos == 0 => Rat::one(),
        None => return Err(Error::Parse(format!("bad term {t:?}"))),
    };
    let rest = &t[pos + 1..];
    let e = if rest.is_empty() {
        1
    } else {
        let digits = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term {t:?}")))?;
        let e: usize = digits.parse().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?;
        if e > MAX_EXPR_DEGREE {
            return Err(Error::Parse(format!("exponent {e} too large")));
        }
        e
    };
    Ok((coeff, e))
}

pub fn parse_tower_kind(s: &str) -> Result<TowerKind> {
    match s.trim().to_ascii_lowercase().as_str() {
        "cyc" | "cyclotomic" => Ok(TowerKind::Cyclotomic),
        "anti" | "anticyclotomic" => Ok(TowerKind::Anticyclotomic),
        "custom" => Ok(TowerKind::Custom(vec![])),
        other => Err(Error::Parse(format!("unknown tower kind {other:?}"))),
    }
}

/// Tower spec from its textual parts. Custom towers take their level polynomials
/// separated by `;`.
pub fn parse_tower_spec(d: &str, p: &str, kind: &str, level: u32, polys: Option<&str>) -> Result<TowerSpec> {
    let d: i64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad field discriminant {d:?}")))?;
    let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
    let kind = match parse_tower_kind(kind)? {
        TowerKind::Custom(_) => {
            let src = polys.ok_or_else(|| Error::Parse("custom tower needs --poly".into()))?;
            TowerKind::Custom(src.split(';').map(parse_poly).collect::<Result<_>>()?)
        }
        k => k,
    };
    TowerSpec::new(d, p, kind, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_frac};

    #[test]
    fn ainvs() {
        let a = parse_ainvs("[1,0,1,-1/2, 3]").unwrap();
        assert_eq!(a[3], rat_frac(-1, 2));
        assert_eq!(parse_ainvs("1 2").unwrap()[4], rat(2));
        assert!(parse_ainvs("[1,2,3]").is_err());
        assert!(parse_curve("[0,0]").is_err());
    }

    #[test]
    fn polys() {
        let f = UniPoly::from_ints(&[1, -3, 0, 1]);
        assert_eq!(parse_poly("x^3 - 3*x + 1").unwrap(), f);
        assert_eq!(parse_poly("[1, -3, 0, 1]").unwrap(), f);
        assert_eq!(parse_poly("-x^2+1/2").unwrap(), UniPoly::new(vec![rat_frac(1, 2), rat(0), rat(-1)]));
        assert_eq!(parse_poly("x + x").unwrap(), UniPoly::from_ints(&[0, 2]));
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("y").is_err());
    }

    #[test]
    fn towers() {
        let s = parse_tower_spec("-2", "3", "cyc", 0, None).unwrap();
        assert!(s.is_cyclotomic());
        assert!(parse_tower_spec("4", "3", "cyc", 0, None).is_err());
        assert!(parse_tower_spec("-1", "3", "custom", 0, None).is_err());
    }
}
