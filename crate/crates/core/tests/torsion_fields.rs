use zptorsion::arith::numfield::{make_labeled, quadratic_field, rationals};
use zptorsion::arith::cyclotomic_real_minpoly;
use zptorsion::curve::GroupShape;
use zptorsion::lmfdb::Gateway;
use zptorsion::torsion::{q_primary_torsion, torsion_bound_by_reduction, torsion_over_field};

fn curve(label: &str) -> zptorsion::curve::EllipticCurveQ {
    Gateway::offline().fetch_curve(label).unwrap().curve()
}

#[test]
fn fifteen_torsion_over_quadratic_fields() {
    let k5 = quadratic_field(5).unwrap();
    let e = curve("50b1");
    assert_eq!(torsion_bound_by_reduction(&e, &k5).unwrap() % 15, 0);
    assert_eq!(q_primary_torsion(&e, &k5, 5).unwrap().shape, GroupShape::cyclic(5));
    assert_eq!(torsion_over_field(&e, &k5).unwrap().shape, GroupShape::cyclic(15));
    assert_eq!(torsion_over_field(&curve("50a3"), &k5).unwrap().shape, GroupShape::cyclic(15));
    let k15 = quadratic_field(-15).unwrap();
    assert_eq!(torsion_over_field(&curve("50b2"), &k15).unwrap().shape, GroupShape::cyclic(15));
    assert_eq!(torsion_over_field(&curve("450b4"), &k15).unwrap().shape, GroupShape::cyclic(15));
}

#[test]
fn twenty_one_torsion_over_real_cyclotomic() {
    let f = make_labeled(&cyclotomic_real_minpoly(9).unwrap(), Some("Q(zeta9)+".into())).unwrap();
    let t = torsion_over_field(&curve("162b1"), &f).unwrap();
    assert_eq!(t.shape, GroupShape::cyclic(21));
    assert_eq!(t.generators.len(), 1);
}

#[test]
fn rational_torsion_matches_fixtures() {
    let q = rationals();
    for rec in Gateway::offline().corpus().records {
        let t = torsion_over_field(&rec.curve(), &q).unwrap();
        assert_eq!(t.shape, rec.torsion_q, "{}", rec.label);
    }
}

// stretch case, not part of the default run: cargo test --test torsion_fields -- --ignored
#[test]
#[ignore]
fn twenty_seven_torsion_over_real_cyclotomic() {
    let f = make_labeled(&cyclotomic_real_minpoly(27).unwrap(), Some("Q(zeta27)+".into())).unwrap();
    assert_eq!(torsion_over_field(&curve("27a4"), &f).unwrap().shape, GroupShape::cyclic(27));
}
