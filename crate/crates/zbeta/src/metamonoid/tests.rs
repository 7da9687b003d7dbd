use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::betacalc::BetaElement;

fn mat(labels: &[crate::Label], rows: &[&[i64]]) -> IntMatrixElement {
    IntMatrixElement::from_rows(labels, rows).unwrap()
}

#[test]
fn mat_m_border_example() {
    // rows/cols in sorted label order 1,2,3; merge 1 and 2 into 4
    let p = mat(&[1, 2, 3], &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    let q = p.m(1, 2, 4).unwrap();
    assert_eq!(q.labels(), vec![3, 4]);
    assert_eq!(q.get(4, 4), 12);
    assert_eq!(q.get(4, 3), 9);
    assert_eq!(q.get(3, 4), 15);
    assert_eq!(q.get(3, 3), 9);
}

#[test]
fn mat_m_zero() {
    let p = IntMatrixElement::zero(&[1, 2]).unwrap();
    let q = p.m(1, 2, 3).unwrap();
    assert_eq!(q, IntMatrixElement::zero(&[3]).unwrap());
}

#[test]
fn mat_m_left_identity_instance() {
    let p = mat(&[2, 7], &[&[3, -1], &[5, 2]]);
    let lhs = p.unit(1).unwrap().m(1, 2, 4).unwrap();
    let rhs = p.rename(2, 4).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn mat_m_label_errors() {
    let p = mat(&[1, 2], &[&[1, 0], &[0, 1]]);
    assert!(p.m(1, 1, 3).is_err());
    assert!(p.m(1, 5, 3).is_err());
    assert!(p.m(1, 2, 2).is_ok());
    assert!(mat(&[1, 2, 3], &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).m(1, 2, 3).is_err());
}

#[test]
fn mat_union_blocks() {
    let p = mat(&[1], &[&[5]]);
    let q = mat(&[2], &[&[7]]);
    let u = p.union(&q).unwrap();
    assert_eq!(u, mat(&[1, 2], &[&[5, 0], &[0, 7]]));
    assert!(p.union(&p).is_err());
    let empty = IntMatrixElement::zero(&[]).unwrap();
    assert_eq!(p.union(&empty).unwrap(), p);
}

#[test]
fn mat_delete_union_counterexample() {
    // off-diagonal entries are lost: d_2 P u d_1 P != P
    let p = mat(&[1, 2], &[&[3, 4], &[5, 6]]);
    let recombined = p
        .delete(2)
        .unwrap()
        .union(&p.delete(1).unwrap())
        .unwrap();
    assert_eq!(recombined, mat(&[1, 2], &[&[3, 0], &[0, 6]]));
    assert_ne!(recombined, p);
}

#[test]
fn intmat_monoid_suite_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut gen = |labels: &[crate::Label]| IntMatrixElement::random(&mut rng, labels);
    let report = monoid_axiom_suite(&IntMatrixSpace, "int-matrix", &mut gen, 100);
    assert!(report.all_pass(), "{report}");
}

#[test]
fn beta_monoid_suite_symbolic() {
    let mut gen = |labels: &[crate::Label]| BetaElement::generic(labels, labels);
    let report = monoid_axiom_suite(&BetaMonoid, "beta-monoid", &mut gen, 1);
    for r in &report.results {
        // stitching then deleting the merged strand keeps swap corrections
        // that deleting both strands never sees; on arbitrary arrays the
        // two sides differ, so only realizable elements satisfy this one
        if r.name == "multiply-then-delete" {
            assert!(!r.pass);
        } else {
            assert!(r.pass, "{report}");
        }
    }
}

#[test]
fn beta_monoid_delete_axiom_on_realizable_elements() {
    let i = BetaMonoid;
    let p = BetaElement::r_element(crate::CrossingSign::Positive, 1, 2)
        .unwrap()
        .union(&BetaElement::r_element(crate::CrossingSign::Negative, 3, 4).unwrap())
        .unwrap();
    let lhs = i.m(&p, 1, 2, 5).and_then(|q| i.delete(&q, 5)).unwrap();
    let rhs = i.delete(&p, 1).and_then(|q| i.delete(&q, 2)).unwrap();
    assert!(lhs.beta_eq(&rhs));
    let lhs = i.m(&p, 2, 3, 5).and_then(|q| i.delete(&q, 5)).unwrap();
    let rhs = i.delete(&p, 2).and_then(|q| i.delete(&q, 3)).unwrap();
    assert!(lhs.beta_eq(&rhs));
}

#[test]
fn beta_bicrossed_suite_symbolic() {
    let mut gen = |t: &[crate::Label], h: &[crate::Label]| BetaElement::generic(t, h);
    let report = bicrossed_axiom_suite(&BetaBicrossed, "beta-bicrossed", &mut gen, 1);
    assert!(report.all_pass(), "{report}");
}

#[test]
fn broken_tm_fails_swap_but_not_associativity() {
    let mut gen = |t: &[crate::Label], h: &[crate::Label]| BetaElement::generic(t, h);
    let report = bicrossed_axiom_suite(&BrokenTmBicrossed, "broken-tm", &mut gen, 1);
    assert!(report.result("tm-associativity").unwrap().pass);
    let sw_tm = report.result("sw-tm").unwrap();
    assert!(!sw_tm.pass);
    assert!(sw_tm.counterexample.is_some());
}

#[test]
fn report_text_and_json() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut gen = |labels: &[crate::Label]| IntMatrixElement::random(&mut rng, labels);
    let report = monoid_axiom_suite(&IntMatrixSpace, "int-matrix", &mut gen, 5);
    let text = report.to_string();
    assert!(text.lines().all(|l| l.starts_with("AXIOM ")));
    assert!(text.contains("AXIOM associativity PASS"));
    let json = report.to_json();
    assert_eq!(json["instance"], "int-matrix");
    assert!(json["results"].as_array().unwrap().len() >= 13);
}

#[test]
fn mat_construction_rejects_bad_entries() {
    let mut entries = BTreeMap::new();
    entries.insert((1, 9), 2);
    assert!(IntMatrixElement::new(&[1, 2], entries).is_err());
    assert!(IntMatrixElement::zero(&[1, 1]).is_err());
}


