//! Randomized property suites with fixed seeds: exact-arithmetic ring
//! laws, rational-function equality as a congruence, the strand-variable
//! bijection invariant under every array operation, basepoint
//! independence of the corner element, and oracle self-consistency.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand::seq::SliceRandom;
use std::collections::BTreeMap;

use zbeta::algebra::{parse_expr, LaurentPoly, Monomial, RationalFn};
use zbeta::betacalc::{BetaElement, CrossingSign, LabelKind};
use zbeta::oracle::{alexander, alexander_minor, canonical_unit_form, compare_up_to_units};
use zbeta::tangle::{parse_knot_table, stitch_plan, z_beta};
use zbeta::{Label, PDCode, VarId};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let mut m = Monomial::one();
        for v in 1..=3u32 {
            let e = rng.gen_range(-2..=2);
            if e != 0 && rng.gen_bool(0.6) {
                m = m.mul(&Monomial::var(VarId::strand(v), e));
            }
        }
        p.add_term(BigInt::from(rng.gen_range(-9..=9i64)), m);
    }
    p
}

fn random_nonzero_poly(rng: &mut StdRng) -> LaurentPoly {
    loop {
        let p = random_poly(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_rf(rng: &mut StdRng) -> RationalFn {
    RationalFn::new(random_poly(rng), random_nonzero_poly(rng)).expect("nonzero denominator")
}

#[test]
fn laurent_ring_axioms() {
    let mut rng = rng(11);
    for _ in 0..1000 {
        let a = random_poly(&mut rng);
        let b = random_poly(&mut rng);
        let c = random_poly(&mut rng);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert_eq!(&a + &(-&a), LaurentPoly::zero());
    }
}

#[test]
fn rational_field_axioms_and_rf_eq_congruence() {
    let mut rng = rng(12);
    for _ in 0..400 {
        let a = random_rf(&mut rng);
        let b = random_rf(&mut rng);
        let c = random_rf(&mut rng);
        assert!((&a + &b).rf_eq(&(&b + &a)));
        assert!((&(&a + &b) + &c).rf_eq(&(&a + &(&b + &c))));
        assert!((&(&a * &b) * &c).rf_eq(&(&a * &(&b * &c))));
        assert!((&a * &(&b + &c)).rf_eq(&(&(&a * &b) + &(&a * &c))));
        assert!((&a - &a).is_zero());
        if !a.is_zero() {
            assert!((&a * &a.inverse().unwrap()).is_one());
        }
        // rf_eq is a congruence: scaling num and den preserves the class
        let s = RationalFn::from_poly(random_nonzero_poly(&mut rng));
        let scaled = &(&a * &s) * &s.inverse().unwrap();
        assert!(a.rf_eq(&scaled));
        assert!((&a + &c).rf_eq(&(&scaled + &c)));
        assert!((&a * &c).rf_eq(&(&scaled * &c)));
    }
}

#[test]
fn substitution_is_a_homomorphism() {
    let mut rng = rng(13);
    let mapping: BTreeMap<VarId, VarId> = BTreeMap::from([
        (VarId::strand(1), VarId::strand(4)),
        (VarId::strand(2), VarId::strand(5)),
    ]);
    for _ in 0..400 {
        let a = random_rf(&mut rng);
        let b = random_rf(&mut rng);
        let lhs = (&a * &b).substitute(&mapping).unwrap();
        let rhs = &a.substitute(&mapping).unwrap() * &b.substitute(&mapping).unwrap();
        assert!(lhs.rf_eq(&rhs));
        let lhs = (&a + &b).substitute(&mapping).unwrap();
        let rhs = &a.substitute(&mapping).unwrap() + &b.substitute(&mapping).unwrap();
        assert!(lhs.rf_eq(&rhs));
    }
}

#[test]
fn render_parse_round_trip() {
    let mut rng = rng(14);
    for _ in 0..400 {
        let a = random_rf(&mut rng);
        let round = parse_expr(&a.to_string()).expect("rendered text parses");
        assert!(a.rf_eq(&round), "{a}");
    }
}

/// Rebuilding through the validating constructor re-runs the
/// strand-variable bijection check.
fn assert_valid(e: &BetaElement) {
    let entries: BTreeMap<(Label, Label), RationalFn> = e
        .nonzero_entries()
        .map(|(&k, v)| (k, v.clone()))
        .collect();
    BetaElement::new(e.omega().clone(), e.tails().to_vec(), e.heads().to_vec(), entries)
        .expect("bijection invariant holds");
}

#[test]
fn bijection_invariant_survives_random_operation_chains() {
    let mut rng = rng(15);
    for _ in 0..60 {
        // disjoint union of crossings over strands 1..=6
        let mut e = BetaElement::empty();
        let mut strands: Vec<Label> = (1..=6).collect();
        strands.shuffle(&mut rng);
        for pair in strands.chunks(2) {
            let sign = if rng.gen_bool(0.5) {
                CrossingSign::Positive
            } else {
                CrossingSign::Negative
            };
            e = e
                .union(&BetaElement::r_element(sign, pair[0], pair[1]).unwrap())
                .unwrap();
        }
        assert_valid(&e);
        for _ in 0..6 {
            let tails = e.tails().to_vec();
            let heads = e.heads().to_vec();
            match rng.gen_range(0..5) {
                0 if tails.len() >= 2 => {
                    let x = tails[rng.gen_range(0..tails.len())];
                    let y = loop {
                        let y = tails[rng.gen_range(0..tails.len())];
                        if y != x {
                            break y;
                        }
                    };
                    if heads.contains(&x) && heads.contains(&y) {
                        e = e.gm(x, y, x).unwrap();
                    }
                }
                1 => {
                    let fresh = 7 + rng.gen_range(0..90);
                    if !tails.contains(&fresh) {
                        e = e
                            .insert_unit(LabelKind::Tail, fresh)
                            .unwrap()
                            .insert_unit(LabelKind::Head, fresh)
                            .unwrap();
                    }
                }
                2 if !tails.is_empty() => {
                    let x = tails[rng.gen_range(0..tails.len())];
                    if heads.contains(&x) {
                        e = e.delete(LabelKind::Head, x).unwrap();
                        e = e.delete(LabelKind::Tail, x).unwrap();
                    }
                }
                3 if !tails.is_empty() => {
                    let x = tails[rng.gen_range(0..tails.len())];
                    let fresh = 100 + rng.gen_range(0..900);
                    if !tails.contains(&fresh) && heads.contains(&x) && !heads.contains(&fresh) {
                        e = e.relabel(LabelKind::Tail, x, fresh).unwrap();
                        e = e.relabel(LabelKind::Head, x, fresh).unwrap();
                    }
                }
                _ => {
                    let in_both: Vec<Label> = tails
                        .iter()
                        .copied()
                        .filter(|t| heads.contains(t))
                        .collect();
                    if in_both.len() >= 2 {
                        let x = in_both[rng.gen_range(0..in_both.len())];
                        let y = in_both[rng.gen_range(0..in_both.len())];
                        if x != y {
                            if let Ok(next) = e.sw(x, y) {
                                e = next;
                            }
                        }
                    }
                }
            }
            assert_valid(&e);
        }
    }
}

fn load_table() -> Vec<(String, PDCode)> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knots.tsv");
    parse_knot_table(&std::fs::read_to_string(path).expect("data/knots.tsv")).expect("valid table")
}

/// Unit-canonical corner: rename the surviving strand variable to T1,
/// flatten the monomial denominator, and canonicalize.
fn canonical_corner(z: &BetaElement) -> LaurentPoly {
    let bp = z.tails()[0];
    let omega = z
        .omega()
        .substitute(&BTreeMap::from([(VarId::strand(bp), VarId::strand(1))]))
        .unwrap();
    assert_eq!(omega.den().num_terms(), 1, "monomial denominator");
    canonical_unit_form(&omega.num().mul_monomial(&omega.den().monomial_content().inverse()))
}

#[test]
fn basepoint_independence_of_the_corner() {
    let mut rng = rng(16);
    for (name, pd) in load_table() {
        if pd.components().len() != 1 || pd.crossings().is_empty() {
            continue;
        }
        let reference = {
            let plan = stitch_plan(&pd, &[]).unwrap();
            canonical_corner(&z_beta(&pd, &plan, None).unwrap())
        };
        let cycle = &pd.components()[0];
        for _ in 0..2 {
            let bp = cycle[rng.gen_range(0..cycle.len())];
            let plan = stitch_plan(&pd, &[bp]).unwrap();
            let corner = canonical_corner(&z_beta(&pd, &plan, None).unwrap());
            assert_eq!(corner, reference, "{name} basepoint {bp}");
        }
    }
}

#[test]
fn oracle_minor_independence_randomized() {
    let mut rng = rng(17);
    for (name, pd) in load_table() {
        if pd.components().len() != 1 || pd.crossings().is_empty() {
            continue;
        }
        let n = pd.crossings().len();
        let reference = alexander(&pd).unwrap();
        for _ in 0..3 {
            let r = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            assert_eq!(alexander_minor(&pd, r, c).unwrap(), reference, "{name} ({r},{c})");
        }
    }
}

#[test]
fn alexander_symmetry_and_odd_determinant() {
    for (name, pd) in load_table() {
        if pd.components().len() != 1 {
            continue;
        }
        let d = alexander(&pd).unwrap();
        let inverted: LaurentPoly = d
            .terms()
            .map(|(m, c)| LaurentPoly::term(c.clone(), m.inverse()))
            .fold(LaurentPoly::zero(), |acc, t| &acc + &t);
        assert_eq!(canonical_unit_form(&d), canonical_unit_form(&inverted), "{name}");
        let mut at_minus_one = BigInt::from(0);
        for (m, c) in d.terms() {
            let e = m.exponent(&VarId::strand(1));
            at_minus_one += if e.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
        }
        assert!(at_minus_one.magnitude().bit(0), "{name} determinant is even");
    }
}

#[test]
fn corner_tracks_oracle_on_random_table_sample() {
    let mut rng = rng(18);
    let mut knots: Vec<(String, PDCode)> = load_table()
        .into_iter()
        .filter(|(_, pd)| pd.components().len() == 1 && !pd.crossings().is_empty())
        .collect();
    knots.shuffle(&mut rng);
    for (name, pd) in knots.into_iter().take(8) {
        let plan = stitch_plan(&pd, &[]).unwrap();
        let z = z_beta(&pd, &plan, None).unwrap();
        let delta = alexander(&pd).unwrap();
        assert!(compare_up_to_units(z.omega(), &delta).unwrap(), "{name}");
    }
}
