use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use super::RegisterSpace;
use crate::Label;

/// A square integer matrix with rows and columns indexed by the same
/// finite label set. Zero entries are never stored, so derived equality
/// is semantic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrixElement {
    labels: BTreeSet<Label>,
    entries: BTreeMap<(Label, Label), i64>,
}

impl IntMatrixElement {
    pub fn zero(labels: &[Label]) -> Result<Self, String> {
        let set: BTreeSet<Label> = labels.iter().copied().collect();
        if set.len() != labels.len() {
            return Err("duplicate label".into());
        }
        Ok(IntMatrixElement {
            labels: set,
            entries: BTreeMap::new(),
        })
    }

    pub fn new(labels: &[Label], entries: BTreeMap<(Label, Label), i64>) -> Result<Self, String> {
        let mut e = IntMatrixElement::zero(labels)?;
        for ((r, c), v) in entries {
            if !e.labels.contains(&r) || !e.labels.contains(&c) {
                return Err(format!("entry ({r},{c}) outside the label set"));
            }
            if v != 0 {
                e.entries.insert((r, c), v);
            }
        }
        Ok(e)
    }

    /// Rows of `data` follow the sorted label order.
    pub fn from_rows(labels: &[Label], data: &[&[i64]]) -> Result<Self, String> {
        let mut e = IntMatrixElement::zero(labels)?;
        let sorted: Vec<Label> = e.labels.iter().copied().collect();
        if data.len() != sorted.len() || data.iter().any(|r| r.len() != sorted.len()) {
            return Err("matrix shape does not match the label set".into());
        }
        for (i, row) in data.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    e.entries.insert((sorted[i], sorted[j]), v);
                }
            }
        }
        Ok(e)
    }

    pub fn random<R: Rng>(rng: &mut R, labels: &[Label]) -> Self {
        let mut e = IntMatrixElement::zero(labels).expect("distinct labels");
        let sorted: Vec<Label> = e.labels.iter().copied().collect();
        for &r in &sorted {
            for &c in &sorted {
                let v = rng.gen_range(-9..=9);
                if v != 0 {
                    e.entries.insert((r, c), v);
                }
            }
        }
        e
    }

    pub fn labels(&self) -> Vec<Label> {
        self.labels.iter().copied().collect()
    }

    pub fn get(&self, r: Label, c: Label) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    fn check_member(&self, x: Label) -> Result<(), String> {
        if self.labels.contains(&x) {
            Ok(())
        } else {
            Err(format!("label {x} not present"))
        }
    }

    fn check_fresh(&self, x: Label) -> Result<(), String> {
        if self.labels.contains(&x) {
            Err(format!("label {x} already present"))
        } else {
            Ok(())
        }
    }

    /// Rows x and y are summed into row z, columns x and y into column z.
    pub fn m(&self, x: Label, y: Label, z: Label) -> Result<Self, String> {
        if x == y {
            return Err("m needs two distinct source labels".into());
        }
        self.check_member(x)?;
        self.check_member(y)?;
        if z != x && z != y {
            self.check_fresh(z)?;
        }
        let relabel = |l: Label| if l == x || l == y { z } else { l };
        let mut labels: BTreeSet<Label> =
            self.labels.iter().copied().filter(|&l| l != x && l != y).collect();
        labels.insert(z);
        let mut entries: BTreeMap<(Label, Label), i64> = BTreeMap::new();
        for (&(r, c), &v) in &self.entries {
            *entries.entry((relabel(r), relabel(c))).or_insert(0) += v;
        }
        entries.retain(|_, v| *v != 0);
        Ok(IntMatrixElement { labels, entries })
    }

    /// Inserts a zero row and zero column labeled x.
    pub fn unit(&self, x: Label) -> Result<Self, String> {
        self.check_fresh(x)?;
        let mut e = self.clone();
        e.labels.insert(x);
        Ok(e)
    }

    pub fn delete(&self, x: Label) -> Result<Self, String> {
        self.check_member(x)?;
        let mut e = self.clone();
        e.labels.remove(&x);
        e.entries.retain(|&(r, c), _| r != x && c != x);
        Ok(e)
    }

    pub fn rename(&self, x: Label, y: Label) -> Result<Self, String> {
        self.check_member(x)?;
        if y != x {
            self.check_fresh(y)?;
        }
        let relabel = |l: Label| if l == x { y } else { l };
        let labels = self.labels.iter().map(|&l| relabel(l)).collect();
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), &v)| ((relabel(r), relabel(c)), v))
            .collect();
        Ok(IntMatrixElement { labels, entries })
    }

    /// Block-diagonal union; the label sets must be disjoint.
    pub fn union(&self, other: &Self) -> Result<Self, String> {
        if let Some(l) = self.labels.intersection(&other.labels).next() {
            return Err(format!("label {l} on both sides"));
        }
        let mut e = self.clone();
        e.labels.extend(&other.labels);
        e.entries.extend(other.entries.iter().map(|(&k, &v)| (k, v)));
        Ok(e)
    }
}

impl fmt::Display for IntMatrixElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorted: Vec<Label> = self.labels.iter().copied().collect();
        write!(f, "{{")?;
        for (i, l) in sorted.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}} [")?;
        for (i, &r) in sorted.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, &c) in sorted.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The integer-matrix meta-monoid.
pub struct IntMatrixSpace;

impl RegisterSpace for IntMatrixSpace {
    type Elem = IntMatrixElement;

    fn labels(&self, e: &IntMatrixElement) -> Vec<Label> {
        e.labels()
    }
    fn m(&self, e: &IntMatrixElement, x: Label, y: Label, z: Label) -> Result<Self::Elem, String> {
        e.m(x, y, z)
    }
    fn unit(&self, e: &IntMatrixElement, x: Label) -> Result<Self::Elem, String> {
        e.unit(x)
    }
    fn delete(&self, e: &IntMatrixElement, x: Label) -> Result<Self::Elem, String> {
        e.delete(x)
    }
    fn rename(&self, e: &IntMatrixElement, x: Label, y: Label) -> Result<Self::Elem, String> {
        e.rename(x, y)
    }
    fn union(&self, a: &IntMatrixElement, b: &IntMatrixElement) -> Result<Self::Elem, String> {
        a.union(b)
    }
    fn eq(&self, a: &IntMatrixElement, b: &IntMatrixElement) -> bool {
        a == b
    }
    fn render(&self, e: &IntMatrixElement) -> String {
        e.to_string()
    }
}
