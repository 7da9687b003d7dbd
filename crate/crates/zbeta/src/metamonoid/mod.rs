//! Labeled-register computers in the abstract: the meta-monoid and
//! meta-bicrossed-product interfaces, an integer-matrix model, the
//! beta-calculus instances, and an axiom harness shared by all of them.

mod harness;
mod instances;
mod intmat;
#[cfg(test)]
mod tests;

pub use harness::{bicrossed_axiom_suite, monoid_axiom_suite, AxiomReport, AxiomResult};
pub use instances::{BetaBicrossed, BetaMonoid, BrokenTmBicrossed};
pub use intmat::{IntMatrixElement, IntMatrixSpace};

use crate::Label;

/// A meta-monoid: register-labeled values with multiplication `m(x,y -> z)`,
/// unit insertion, deletion, renaming, and disjoint union. Operations return
/// `Err` on label misuse; axiom checks treat that as a failure.
pub trait RegisterSpace {
    type Elem: Clone;

    fn labels(&self, e: &Self::Elem) -> Vec<Label>;
    fn m(&self, e: &Self::Elem, x: Label, y: Label, z: Label) -> Result<Self::Elem, String>;
    fn unit(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn delete(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn rename(&self, e: &Self::Elem, x: Label, y: Label) -> Result<Self::Elem, String>;
    fn union(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, String>;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn render(&self, e: &Self::Elem) -> String;
}

/// A meta-bicrossed product: values carry independent tail and head label
/// sets, each with its own meta-monoid structure, linked by the swap map.
pub trait BicrossedSpace {
    type Elem: Clone;

    fn tails(&self, e: &Self::Elem) -> Vec<Label>;
    fn heads(&self, e: &Self::Elem) -> Vec<Label>;
    fn tm(&self, e: &Self::Elem, x: Label, y: Label, z: Label) -> Result<Self::Elem, String>;
    fn hm(&self, e: &Self::Elem, x: Label, y: Label, z: Label) -> Result<Self::Elem, String>;
    fn sw(&self, e: &Self::Elem, x: Label, y: Label) -> Result<Self::Elem, String>;
    fn te(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn he(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn td(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn hd(&self, e: &Self::Elem, x: Label) -> Result<Self::Elem, String>;
    fn tr(&self, e: &Self::Elem, x: Label, y: Label) -> Result<Self::Elem, String>;
    fn hr(&self, e: &Self::Elem, x: Label, y: Label) -> Result<Self::Elem, String>;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn render(&self, e: &Self::Elem) -> String;
}
