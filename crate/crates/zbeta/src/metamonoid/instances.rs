use std::collections::BTreeMap;

use super::{BicrossedSpace, RegisterSpace};
use crate::betacalc::{BetaElement, BetaError, LabelKind};
use crate::{Label, RationalFn};

fn s(r: Result<BetaElement, BetaError>) -> Result<BetaElement, String> {
    r.map_err(|e| e.to_string())
}

/// The beta-calculus as a meta-monoid: registers are strands (each a tail
/// and head pair with the same label) and multiplication is stitching.
pub struct BetaMonoid;

impl RegisterSpace for BetaMonoid {
    type Elem = BetaElement;

    fn labels(&self, e: &BetaElement) -> Vec<Label> {
        e.tails().to_vec()
    }
    fn m(&self, e: &BetaElement, x: Label, y: Label, z: Label) -> Result<BetaElement, String> {
        s(e.gm(x, y, z))
    }
    fn unit(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.insert_unit(LabelKind::Tail, x).and_then(|q| q.insert_unit(LabelKind::Head, x)))
    }
    fn delete(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.delete(LabelKind::Head, x).and_then(|q| q.delete(LabelKind::Tail, x)))
    }
    fn rename(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        s(e.relabel(LabelKind::Tail, x, y).and_then(|q| q.relabel(LabelKind::Head, x, y)))
    }
    fn union(&self, a: &BetaElement, b: &BetaElement) -> Result<BetaElement, String> {
        s(a.union(b))
    }
    fn eq(&self, a: &BetaElement, b: &BetaElement) -> bool {
        a.beta_eq(b)
    }
    fn render(&self, e: &BetaElement) -> String {
        e.to_string()
    }
}

/// The beta-calculus as a meta-bicrossed product: tail and head label sets
/// are independent.
pub struct BetaBicrossed;

impl BicrossedSpace for BetaBicrossed {
    type Elem = BetaElement;

    fn tails(&self, e: &BetaElement) -> Vec<Label> {
        e.tails().to_vec()
    }
    fn heads(&self, e: &BetaElement) -> Vec<Label> {
        e.heads().to_vec()
    }
    fn tm(&self, e: &BetaElement, x: Label, y: Label, z: Label) -> Result<BetaElement, String> {
        s(e.tm(x, y, z))
    }
    fn hm(&self, e: &BetaElement, x: Label, y: Label, z: Label) -> Result<BetaElement, String> {
        s(e.hm(x, y, z))
    }
    fn sw(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        s(e.sw(x, y))
    }
    fn te(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.insert_unit(LabelKind::Tail, x))
    }
    fn he(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.insert_unit(LabelKind::Head, x))
    }
    fn td(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.delete(LabelKind::Tail, x))
    }
    fn hd(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        s(e.delete(LabelKind::Head, x))
    }
    fn tr(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        s(e.relabel(LabelKind::Tail, x, y))
    }
    fn hr(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        s(e.relabel(LabelKind::Head, x, y))
    }
    fn eq(&self, a: &BetaElement, b: &BetaElement) -> bool {
        a.beta_eq(b)
    }
    fn render(&self, e: &BetaElement) -> String {
        e.to_string()
    }
}

/// Like [`BetaBicrossed`] but with tail multiplication deliberately broken:
/// rows are summed without renaming the strand variables. Associativity
/// still holds; the swap relation involving tm does not.
pub struct BrokenTmBicrossed;

impl BicrossedSpace for BrokenTmBicrossed {
    type Elem = BetaElement;

    fn tails(&self, e: &BetaElement) -> Vec<Label> {
        e.tails().to_vec()
    }
    fn heads(&self, e: &BetaElement) -> Vec<Label> {
        e.heads().to_vec()
    }
    fn tm(&self, e: &BetaElement, x: Label, y: Label, z: Label) -> Result<BetaElement, String> {
        if x == y {
            return Err("tm needs two distinct source labels".into());
        }
        let tails = e.tails();
        if !tails.contains(&x) || !tails.contains(&y) {
            return Err("tm source label not present".into());
        }
        if z != x && z != y && tails.contains(&z) {
            return Err("tm target label already present".into());
        }
        let mut new_tails: Vec<Label> = Vec::new();
        for &t in tails {
            if t == x {
                new_tails.push(z);
            } else if t != y {
                new_tails.push(t);
            }
        }
        let mut entries: BTreeMap<(Label, Label), RationalFn> = BTreeMap::new();
        for (&(t, h), v) in e.nonzero_entries() {
            let t2 = if t == x || t == y { z } else { t };
            let cur = entries.entry((t2, h)).or_insert_with(RationalFn::zero);
            *cur = &*cur + v;
        }
        Ok(BetaElement::new_unchecked(
            e.omega().clone(),
            new_tails,
            e.heads().to_vec(),
            entries,
        ))
    }
    fn hm(&self, e: &BetaElement, x: Label, y: Label, z: Label) -> Result<BetaElement, String> {
        BetaBicrossed.hm(e, x, y, z)
    }
    fn sw(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        BetaBicrossed.sw(e, x, y)
    }
    fn te(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        BetaBicrossed.te(e, x)
    }
    fn he(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        BetaBicrossed.he(e, x)
    }
    fn td(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        BetaBicrossed.td(e, x)
    }
    fn hd(&self, e: &BetaElement, x: Label) -> Result<BetaElement, String> {
        BetaBicrossed.hd(e, x)
    }
    fn tr(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        BetaBicrossed.tr(e, x, y)
    }
    fn hr(&self, e: &BetaElement, x: Label, y: Label) -> Result<BetaElement, String> {
        BetaBicrossed.hr(e, x, y)
    }
    fn eq(&self, a: &BetaElement, b: &BetaElement) -> bool {
        a.beta_eq(b)
    }
    fn render(&self, e: &BetaElement) -> String {
        e.to_string()
    }
}
