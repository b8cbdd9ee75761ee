//! Decoding of LMFDB `ec_curvedata` API rows.

use num_bigint::BigInt;
use serde_json::Value;

use super::record::CurveRecord;
use crate::arith::rat::{parse_rat, Rat};
use crate::curve::model::{EllipticCurveQ, GroupShape};
use crate::error::{Error, Result};

fn field<'a>(row: &'a Value, key: &str) -> Result<&'a Value> {
    row.get(key).ok_or_else(|| Error::Parse(format!("missing field {key}")))
}

fn as_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => parse_rat(&n.to_string()),
        Value::String(s) => parse_rat(s),
        Value::Array(nd) if nd.len() == 2 => Ok(as_rat(&nd[0])? / as_rat(&nd[1])?),
        _ => Err(Error::Parse(format!("not a rational: {v}"))),
    }
}

fn as_u64(v: &Value) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| Error::Parse(format!("not a nonnegative integer: {v}")))
}

fn as_list(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("not a list: {v}")))
}

/// One API row to a validated record. The label prefers the Cremona label.
pub fn parse_api_record(row: &Value) -> Result<CurveRecord> {
    let label = row
        .get("Clabel")
        .or_else(|| row.get("lmfdb_label"))
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing label".into()))?
        .to_string();
    let a: Vec<Rat> = as_list(field(row, "ainvs")?)?.iter().map(as_rat).collect::<Result<_>>()?;
    let a_invariants: [Rat; 5] = a.try_into().map_err(|_| Error::Parse("ainvs must have 5 entries".into()))?;
    let j = match row.get("jinv") {
        Some(v) => as_rat(v)?,
        None => EllipticCurveQ::new(a_invariants.clone())?.j_invariant(),
    };
    let tors: Vec<u64> = match row.get("torsion_structure") {
        Some(v) => as_list(v)?.iter().map(as_u64).collect::<Result<_>>()?,
        None => vec![],
    };
    let torsion_q = match tors.as_slice() {
        [] => GroupShape::trivial(),
        [n] => GroupShape::new(1, *n)?,
        [a, b] => GroupShape::new(*a, *b)?,
        _ => return Err(Error::Parse("torsion_structure has more than 2 factors".into())),
    };
    let cyclic_isogeny_degrees = match row.get("isogeny_degrees") {
        Some(v) => as_list(v)?.iter().map(as_u64).filter(|d| !matches!(d, Ok(1))).collect::<Result<_>>()?,
        None => Default::default(),
    };
    let conductor = match field(row, "conductor")? {
        Value::Number(n) => n.to_string().parse::<BigInt>().ok(),
        Value::String(s) => s.parse::<BigInt>().ok(),
        _ => None,
    }
    .ok_or_else(|| Error::Parse("conductor".into()))?;
    let rec = CurveRecord {
        label,
        a_invariants,
        j,
        torsion_q,
        cyclic_isogeny_degrees,
        conductor,
        kernel_fields: Default::default(),
        two_division_field: None,
    };
    rec.validate()?;
    Ok(rec)
}

/// The `data` rows of an API response body.
pub fn parse_api_response(body: &str) -> Result<Vec<CurveRecord>> {
    let v: Value = serde_json::from_str(body)?;
    let rows = v.get("data").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing data array".into()))?;
    rows.iter().map(parse_api_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_row() {
        let body = r#"{"data":[{"Clabel":"11a3","lmfdb_label":"11.a3","ainvs":[0,-1,1,0,0],
            "jinv":[-4096,11],"torsion_structure":[5],"isogeny_degrees":[1,5,25],"conductor":11}]}"#;
        let recs = parse_api_response(body).unwrap();
        assert_eq!(recs[0].label, "11a3");
        assert_eq!(recs[0].torsion_q, GroupShape::cyclic(5));
        assert!(recs[0].has_isogeny(25) && !recs[0].has_isogeny(1));
    }

    #[test]
    fn rejects_inconsistent_j() {
        let body = r#"{"data":[{"Clabel":"11a3","ainvs":[0,-1,1,0,0],"jinv":[1,1],"conductor":11}]}"#;
        assert!(parse_api_response(body).is_err());
    }
}
