use zptorsion::isogeny::{has_rational_cyclic_isogeny, kernel_field_degrees};
use zptorsion::lmfdb::Gateway;

#[test]
fn direct_detection_matches_fixture_degrees() {
    for rec in Gateway::offline().corpus().records {
        let e = rec.curve();
        for n in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25] {
            let got = has_rational_cyclic_isogeny(&e, n).unwrap();
            assert_eq!(got, rec.has_isogeny(n), "{} n = {n}", rec.label);
        }
    }
}

#[test]
fn escape_hatch_degrees() {
    let g = Gateway::offline();
    let c = |l: &str| g.fetch_curve(l).unwrap().curve();
    assert_eq!(kernel_field_degrees(&c("1849a1"), 43).unwrap(), vec![21]);
    assert_eq!(kernel_field_degrees(&c("4489a1"), 67).unwrap(), vec![33]);
    assert_eq!(kernel_field_degrees(&c("121b1"), 11).unwrap(), vec![5]);
    assert!(has_rational_cyclic_isogeny(&c("121b1"), 11).unwrap());
    assert!(has_rational_cyclic_isogeny(&c("1849a1"), 43).unwrap());
}
