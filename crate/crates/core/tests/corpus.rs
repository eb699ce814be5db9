mod common;
mod suites;

use common::*;
use rbla_core::fixtures::{na2_corpus, na2_operators};
use rbla_core::scalar::int;

#[test]
fn na2_enumeration_matches_closed_form() {
    for w in [0, 1, -1] {
        assert_eq!(na2_operators(w, 2), na2_rb_by_formula(w, 2), "weight {w}");
    }
    // frozen sizes of the corpus
    assert_eq!(na2_operators(0, 2).len(), 37);
    assert_eq!(na2_operators(1, 2).len(), 66);
    assert_eq!(na2_operators(-1, 2).len(), 66);
    assert_eq!(na2_corpus().len(), 169);
}

#[test]
fn na2_corpus_members_satisfy_the_identity_by_direct_expansion() {
    for rb in na2_corpus() {
        let w: i64 = rb.weight().to_integer().try_into().unwrap();
        let e: Vec<i64> = rb.p().flat().iter().map(|c| c.to_integer().try_into().unwrap()).collect();
        let rows = rows_of([e[0], e[1], e[2], e[3]]);
        assert!(rb_defect(&na2_bracket, &rows, w, 0, 1).iter().all(|c| *c == 0));
        assert!(rb.weight() == &int(w));
    }
}

fn assert_suite(out: suites::Outcome) {
    println!("{}", out.line());
    assert!(out.disagreements.is_empty(), "{:#?}", out.disagreements);
    assert!(out.instances >= 20);
    assert!(out.passing > 0 && out.failing > 0, "{}", out.line());
}

#[test]
fn admissibility_agrees_with_dual_representation() {
    assert_suite(suites::admissibility_duality());
}

#[test]
fn semidirect_operator_agrees_with_representation() {
    assert_suite(suites::semidirect_biconditional());
}

#[test]
fn rb_bowtie_agrees_with_matched_pair() {
    assert_suite(suites::bowtie_biconditional());
}

#[test]
fn tensor_and_operator_criteria_agree() {
    assert_suite(suites::solution_biconditional());
}

#[test]
fn semidirect_admissibility_three_ways_agree() {
    assert_suite(suites::semidirect_admissibility());
}

#[test]
fn standard_companions_are_admissible() {
    let (checked, failures) = suites::standard_admissible_failures();
    assert!(checked > 500, "{checked}");
    assert!(failures.is_empty(), "{failures:#?}");
}
