mod common;

use common::props;

const CASES: u32 = 64;

#[test]
fn factorization_reexpands() {
    props::factorization(CASES).unwrap();
}

#[test]
fn division_polynomial_degrees() {
    props::divpoly_degrees(CASES).unwrap();
}

#[test]
fn multiplication_x_formula() {
    props::mult_x_formula(CASES).unwrap();
}

#[test]
fn hasse_bound() {
    props::hasse(CASES).unwrap();
}

#[test]
fn velu_preserves_point_counts() {
    props::velu(CASES).unwrap();
}
