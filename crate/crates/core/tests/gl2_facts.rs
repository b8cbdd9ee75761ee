use zptorsion::gl2::{
    enumerate_subgroups, fixed_cyclic_subgroups, gl2_order, has_surjective_det, is_abelian, is_admissible_image,
    subgroup_classes, GL2Element,
};

#[test]
fn lagrange() {
    for n in 2..=4 {
        for h in enumerate_subgroups(n).unwrap() {
            assert_eq!(gl2_order(n) % h.order() as u64, 0);
        }
    }
}

#[test]
fn order_six_subgroups_mod_4() {
    let six: Vec<_> = enumerate_subgroups(4).unwrap().into_iter().filter(|h| h.order() == 6).collect();
    assert_eq!(six.len(), 20);
    // cyclic ones exist, e.g. generated by [[0,1],[1,1]]
    let abelian: Vec<_> = six.iter().filter(|h| is_abelian(h)).collect();
    assert_eq!(abelian.len(), 12);
    let fib = GL2Element::new(4, 0, 1, 1, 1).unwrap();
    assert!(abelian.iter().any(|h| h.contains(&fib)));
    assert_eq!(abelian.iter().filter(|h| has_surjective_det(h)).count(), 8);
    // but none of them can be a mod-4 Galois image over Q
    assert!(abelian.iter().all(|h| !is_admissible_image(h)));
    assert!(six.iter().any(|h| is_admissible_image(h)));
}

#[test]
fn involutions_mod_3_fix_a_line() {
    let two: Vec<_> = enumerate_subgroups(3).unwrap().into_iter().filter(|h| h.order() == 2).collect();
    assert!(!two.is_empty());
    for h in &two {
        assert!(!fixed_cyclic_subgroups(h, 3).is_empty());
    }
}

#[test]
fn class_counts_are_stable() {
    let all = enumerate_subgroups(4).unwrap().len();
    let classes = subgroup_classes(4).unwrap().len();
    assert!(classes <= all);
    println!("GL2(Z/4Z): {all} subgroups in {classes} classes");
}
