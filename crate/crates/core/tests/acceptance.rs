//! Acceptance criteria: one test per criterion, each printing a single
//! PASS/FAIL line followed by any failed checks.

use std::io::Write;

use biquad_core::verify::{self, Report};

/// Writes the verdict straight to stdout, past the test harness capture.
fn gate(r: Report) {
    writeln!(std::io::stdout(), "{}", r.line()).unwrap();
    assert!(r.passed, "criterion {} failed", r.number);
}

#[test]
fn criterion_01_relations_and_associativity() {
    gate(verify::relations_and_associativity(200));
}

#[test]
fn criterion_02_centre() {
    gate(verify::centre_correctness(None));
}

#[test]
fn criterion_03_centralizer() {
    gate(verify::centralizer_correctness(None));
}

#[test]
fn criterion_04_f_mu_identity() {
    gate(verify::f_mu_identity());
}

#[test]
fn criterion_05_free_basis_roundtrip() {
    gate(verify::free_basis_roundtrip(100));
}

#[test]
fn criterion_06_weights() {
    gate(verify::weight_theory(20));
}

#[test]
fn criterion_07_normal_iff_weight() {
    gate(verify::normal_equals_weight(50));
}

#[test]
fn criterion_08_simplicity_and_ideals() {
    gate(verify::simplicity_and_ideals(None));
}

#[test]
fn criterion_09_stratification() {
    gate(verify::stratification(None));
}

#[test]
fn criterion_10_automorphisms() {
    gate(verify::automorphism_group(5));
}

#[test]
fn criterion_11_dimensions() {
    gate(verify::dimension_formulas());
}
