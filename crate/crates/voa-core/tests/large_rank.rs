//! End-to-end checks at ranks beyond the hand-verified `l = 2` cases.

use voa_core::classification::verify_classification;
use voa_core::enveloping::generate_R;
use voa_core::verma::{is_singular, singular_vector};

#[test]
fn singular_vector_is_annihilated_at_rank_six() {
    let v = singular_vector(6).unwrap();
    let (ok, failures) = is_singular(&v).unwrap();
    assert!(ok, "failures: {:?}", failures.iter().map(|(n, _)| n).collect::<Vec<_>>());
}

#[test]
fn singular_vector_is_annihilated_at_rank_eight() {
    let v = singular_vector(8).unwrap();
    let (ok, failures) = is_singular(&v).unwrap();
    assert!(ok, "failures: {:?}", failures.iter().map(|(n, _)| n).collect::<Vec<_>>());
}

#[test]
fn adjoint_closure_dimensions_at_rank_four() {
    let m = generate_R(4).unwrap();
    assert_eq!(m.dim(), 24);
    assert_eq!(m.dim_zero_weight(), 4);
}

#[test]
fn adjoint_closure_dimensions_at_rank_six() {
    let m = generate_R(6).unwrap();
    assert_eq!(m.dim(), 48);
    assert_eq!(m.dim_zero_weight(), 6);
}

#[test]
fn classification_holds_at_rank_six() {
    let report = verify_classification(6).unwrap();
    assert!(report.verdict());
    assert_eq!(report.solutions.len(), 64);
}
