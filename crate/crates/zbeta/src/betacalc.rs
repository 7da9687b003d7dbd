//! The beta calculus: omega-decorated arrays of rational functions with
//! tail/head multiplications, the swap map, stitching, and the R-matrices
//! assigned to crossings.

use crate::algebra::{parse_expr, AlgebraError, RationalFn, VarId};
use crate::Label;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BetaError {
    #[error("label error: {0}")]
    Label(String),
    #[error("singular swap: epsilon = 1 + entry is identically zero")]
    SingularSwap,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

type Result<T> = std::result::Result<T, BetaError>;

/// Sign of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn flip(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }
}

impl fmt::Display for CrossingSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossingSign::Positive => write!(f, "+"),
            CrossingSign::Negative => write!(f, "-"),
        }
    }
}

/// An element of the beta calculus: a corner element omega, rows labeled
/// by tails, columns labeled by heads, entries rational functions. Zero
/// entries are not stored. Strand variables appearing anywhere must be
/// `T_t` for a current tail label `t` (free symbols are exempt).
///
/// Values are immutable: every operation returns a new element.
#[derive(Debug, Clone)]
pub struct BetaElement {
    omega: RationalFn,
    tails: Vec<Label>,
    heads: Vec<Label>,
    entries: BTreeMap<(Label, Label), RationalFn>,
}

impl BetaElement {
    /// The empty element: no labels, omega = 1. Unit of disjoint union.
    pub fn empty() -> Self {
        BetaElement {
            omega: RationalFn::one(),
            tails: Vec::new(),
            heads: Vec::new(),
            entries: BTreeMap::new(),
        }
    }

    pub fn new(
        omega: RationalFn,
        tails: Vec<Label>,
        heads: Vec<Label>,
        entries: BTreeMap<(Label, Label), RationalFn>,
    ) -> Result<Self> {
        let tset: BTreeSet<_> = tails.iter().collect();
        let hset: BTreeSet<_> = heads.iter().collect();
        if tset.len() != tails.len() {
            return Err(BetaError::Label("duplicate tail label".into()));
        }
        if hset.len() != heads.len() {
            return Err(BetaError::Label("duplicate head label".into()));
        }
        let mut pruned = BTreeMap::new();
        for ((t, h), v) in entries {
            if !tset.contains(&t) || !hset.contains(&h) {
                return Err(BetaError::Label(format!(
                    "entry ({t},{h}) outside the label sets"
                )));
            }
            if !v.is_zero() {
                pruned.insert((t, h), v);
            }
        }
        let e = BetaElement {
            omega,
            tails,
            heads,
            entries: pruned,
        };
        e.check_strand_vars()?;
        Ok(e)
    }

    /// Builds without the strand-variable bijection check. Only for the
    /// deliberately broken harness instances, whose whole point is that
    /// the invariant fails.
    pub(crate) fn new_unchecked(
        omega: RationalFn,
        tails: Vec<Label>,
        heads: Vec<Label>,
        entries: BTreeMap<(Label, Label), RationalFn>,
    ) -> Self {
        let entries = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        BetaElement {
            omega,
            tails,
            heads,
            entries,
        }
    }

    /// The R-matrix of a single crossing with over strand `o` and under
    /// strand `u`: omega = 1 and a single entry `(t_o, h_u)` equal to
    /// `T_o - 1` (positive) or `T_o^-1 - 1` (negative).
    pub fn r_element(sign: CrossingSign, o: Label, u: Label) -> Result<Self> {
        if o == u {
            return Err(BetaError::Label(format!(
                "a crossing needs two distinct strand labels, got {o} twice"
            )));
        }
        let exp = sign.as_int();
        let val = &RationalFn::from_poly(crate::algebra::LaurentPoly::monomial(
            VarId::Strand(o),
            exp,
        )) - &RationalFn::one();
        let mut entries = BTreeMap::new();
        entries.insert((o, u), val);
        BetaElement::new(RationalFn::one(), vec![o, u], vec![o, u], entries)
    }

    pub fn omega(&self) -> &RationalFn {
        &self.omega
    }

    pub fn tails(&self) -> &[Label] {
        &self.tails
    }

    pub fn heads(&self) -> &[Label] {
        &self.heads
    }

    /// The entry at `(tail, head)`; absent entries are zero.
    pub fn entry(&self, t: Label, h: Label) -> RationalFn {
        self.entries
            .get(&(t, h))
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(Label, Label), &RationalFn)> {
        self.entries.iter()
    }

    fn has_tail(&self, x: Label) -> bool {
        self.tails.contains(&x)
    }

    fn has_head(&self, x: Label) -> bool {
        self.heads.contains(&x)
    }

    /// Every strand variable in omega or an entry must belong to a tail.
    fn check_strand_vars(&self) -> Result<()> {
        let tset: BTreeSet<Label> = self.tails.iter().copied().collect();
        let mut vars = self.omega.support_vars();
        for v in self.entries.values() {
            vars.extend(v.support_vars());
        }
        for v in vars {
            if let VarId::Strand(i) = v {
                if !tset.contains(&i) {
                    return Err(BetaError::Label(format!(
                        "strand variable T{i} has no matching tail label"
                    )));
                }
            }
        }
        Ok(())
    }

    fn checked(self) -> Result<Self> {
        self.check_strand_vars()?;
        Ok(self)
    }

    /// Disjoint union: omegas multiply, entries become block-diagonal.
    pub fn union(&self, other: &BetaElement) -> Result<BetaElement> {
        for t in &other.tails {
            if self.has_tail(*t) {
                return Err(BetaError::Label(format!("tail label {t} on both sides")));
            }
        }
        for h in &other.heads {
            if self.has_head(*h) {
                return Err(BetaError::Label(format!("head label {h} on both sides")));
            }
        }
        let mut tails = self.tails.clone();
        tails.extend(&other.tails);
        let mut heads = self.heads.clone();
        heads.extend(&other.heads);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(k, v)| (*k, v.clone())));
        BetaElement {
            omega: &self.omega * &other.omega,
            tails,
            heads,
            entries,
        }
        .checked()
    }

    /// Tail multiplication: rows `t_x` and `t_y` are summed into `t_z`,
    /// and every occurrence of `T_x` or `T_y` becomes `T_z`.
    pub fn tm(&self, x: Label, y: Label, z: Label) -> Result<BetaElement> {
        if x == y {
            return Err(BetaError::Label("tm needs two distinct tails".into()));
        }
        if !self.has_tail(x) || !self.has_tail(y) {
            return Err(BetaError::Label(format!("tm: missing tail {x} or {y}")));
        }
        if z != x && z != y && self.has_tail(z) {
            return Err(BetaError::Label(format!("tm: target tail {z} in use")));
        }
        let tails: Vec<Label> = self
            .tails
            .iter()
            .filter(|&&t| t != y)
            .map(|&t| if t == x { z } else { t })
            .collect();
        let mut mapping = BTreeMap::new();
        if x != z {
            mapping.insert(VarId::Strand(x), VarId::Strand(z));
        }
        if y != z {
            mapping.insert(VarId::Strand(y), VarId::Strand(z));
        }
        let mut entries = BTreeMap::new();
        for h in &self.heads {
            let merged = &self.entry(x, *h) + &self.entry(y, *h);
            if !merged.is_zero() {
                entries.insert((z, *h), merged);
            }
        }
        for ((t, h), v) in &self.entries {
            if *t != x && *t != y {
                entries.insert((*t, *h), v.clone());
            }
        }
        let mut out = BTreeMap::new();
        for ((t, h), v) in entries {
            let v = v.substitute(&mapping)?;
            if !v.is_zero() {
                out.insert((t, h), v);
            }
        }
        BetaElement {
            omega: self.omega.substitute(&mapping)?,
            tails,
            heads: self.heads.clone(),
            entries: out,
        }
        .checked()
    }

    /// Head multiplication: with columns `a` at `h_x` and `b` at `h_y`,
    /// the new column at `h_z` is `a + b + <a> b` where `<a>` is the sum
    /// of `a`'s entries. No change of variables.
    pub fn hm(&self, x: Label, y: Label, z: Label) -> Result<BetaElement> {
        if x == y {
            return Err(BetaError::Label("hm needs two distinct heads".into()));
        }
        if !self.has_head(x) || !self.has_head(y) {
            return Err(BetaError::Label(format!("hm: missing head {x} or {y}")));
        }
        if z != x && z != y && self.has_head(z) {
            return Err(BetaError::Label(format!("hm: target head {z} in use")));
        }
        let heads: Vec<Label> = self
            .heads
            .iter()
            .filter(|&&h| h != y)
            .map(|&h| if h == x { z } else { h })
            .collect();
        let bracket_a = self
            .tails
            .iter()
            .fold(RationalFn::zero(), |acc, &t| &acc + &self.entry(t, x));
        let mut entries = BTreeMap::new();
        for &t in &self.tails {
            let a = self.entry(t, x);
            let b = self.entry(t, y);
            let v = &(&a + &b) + &(&bracket_a * &b);
            if !v.is_zero() {
                entries.insert((t, z), v);
            }
        }
        for ((t, h), v) in &self.entries {
            if *h != x && *h != y {
                entries.insert((*t, *h), v.clone());
            }
        }
        BetaElement {
            omega: self.omega.clone(),
            tails: self.tails.clone(),
            heads,
            entries,
        }
        .checked()
    }

    /// The swap map at tail `x`, head `y`. With `a` the entry at
    /// `(t_x, h_y)`, `b` the rest of row `t_x`, `g` the rest of column
    /// `h_y`, `d` the remaining block, and `eps = 1 + a`:
    /// omega scales by `eps`, the pivot and its row scale by
    /// `1 + <g>/eps`, the column divides by `eps`, and the block becomes
    /// `d - g b / eps`.
    pub fn sw(&self, x: Label, y: Label) -> Result<BetaElement> {
        if !self.has_tail(x) {
            return Err(BetaError::Label(format!("sw: missing tail {x}")));
        }
        if !self.has_head(y) {
            return Err(BetaError::Label(format!("sw: missing head {y}")));
        }
        let a = self.entry(x, y);
        let eps = &RationalFn::one() + &a;
        if eps.is_zero() {
            return Err(BetaError::SingularSwap);
        }
        let bracket_g = self
            .tails
            .iter()
            .filter(|&&t| t != x)
            .fold(RationalFn::zero(), |acc, &t| &acc + &self.entry(t, y));
        // 1 + <g>/eps
        let row_factor = &RationalFn::one() + &bracket_g.div(&eps).expect("eps nonzero");
        let mut entries = BTreeMap::new();
        for &t in &self.tails {
            for &h in &self.heads {
                let v = if t == x {
                    // pivot and the rest of its row scale the same way
                    &self.entry(t, h) * &row_factor
                } else if h == y {
                    self.entry(t, h).div(&eps).expect("eps nonzero")
                } else {
                    let g_t = self.entry(t, y);
                    let b_h = self.entry(x, h);
                    &self.entry(t, h) - &(&g_t * &b_h).div(&eps).expect("eps nonzero")
                };
                if !v.is_zero() {
                    entries.insert((t, h), v);
                }
            }
        }
        BetaElement {
            omega: &self.omega * &eps,
            tails: self.tails.clone(),
            heads: self.heads.clone(),
            entries,
        }
        .checked()
    }

    /// Stitching: attach the head of strand `x` to the tail of strand `y`
    /// and call the result `z`. The composite `sw` then `tm` then `hm`.
    pub fn gm(&self, x: Label, y: Label, z: Label) -> Result<BetaElement> {
        if x == y {
            return Err(BetaError::Label("gm needs two distinct strands".into()));
        }
        self.sw(x, y)?.tm(x, y, z)?.hm(x, y, z)
    }

    /// Insert a zero row (tail) or zero column (head) labeled `x`.
    pub fn insert_unit(&self, kind: LabelKind, x: Label) -> Result<BetaElement> {
        let mut out = self.clone();
        match kind {
            LabelKind::Tail => {
                if self.has_tail(x) {
                    return Err(BetaError::Label(format!("tail {x} already present")));
                }
                out.tails.push(x);
            }
            LabelKind::Head => {
                if self.has_head(x) {
                    return Err(BetaError::Label(format!("head {x} already present")));
                }
                out.heads.push(x);
            }
        }
        Ok(out)
    }

    /// Delete a label. Head deletion drops the column; tail deletion sets
    /// `T_x` to 1 everywhere and then drops the row.
    pub fn delete(&self, kind: LabelKind, x: Label) -> Result<BetaElement> {
        match kind {
            LabelKind::Head => {
                if !self.has_head(x) {
                    return Err(BetaError::Label(format!("no head {x} to delete")));
                }
                let mut out = self.clone();
                out.heads.retain(|&h| h != x);
                out.entries.retain(|&(_, h), _| h != x);
                Ok(out)
            }
            LabelKind::Tail => {
                if !self.has_tail(x) {
                    return Err(BetaError::Label(format!("no tail {x} to delete")));
                }
                let v = VarId::Strand(x);
                let mut entries = BTreeMap::new();
                for ((t, h), val) in &self.entries {
                    if *t == x {
                        continue;
                    }
                    let val = val.set_var_to_one(&v)?;
                    if !val.is_zero() {
                        entries.insert((*t, *h), val);
                    }
                }
                let mut tails = self.tails.clone();
                tails.retain(|&t| t != x);
                BetaElement {
                    omega: self.omega.set_var_to_one(&v)?,
                    tails,
                    heads: self.heads.clone(),
                    entries,
                }
                .checked()
            }
        }
    }

    /// Rename a label; for tails this also renames the strand variable.
    pub fn relabel(&self, kind: LabelKind, x: Label, y: Label) -> Result<BetaElement> {
        if x == y {
            return Ok(self.clone());
        }
        match kind {
            LabelKind::Tail => {
                if !self.has_tail(x) {
                    return Err(BetaError::Label(format!("no tail {x} to rename")));
                }
                if self.has_tail(y) {
                    return Err(BetaError::Label(format!("tail {y} already present")));
                }
                let mut mapping = BTreeMap::new();
                mapping.insert(VarId::Strand(x), VarId::Strand(y));
                let tails = self
                    .tails
                    .iter()
                    .map(|&t| if t == x { y } else { t })
                    .collect();
                let mut entries = BTreeMap::new();
                for ((t, h), v) in &self.entries {
                    let t2 = if *t == x { y } else { *t };
                    entries.insert((t2, *h), v.substitute(&mapping)?);
                }
                BetaElement {
                    omega: self.omega.substitute(&mapping)?,
                    tails,
                    heads: self.heads.clone(),
                    entries,
                }
                .checked()
            }
            LabelKind::Head => {
                if !self.has_head(x) {
                    return Err(BetaError::Label(format!("no head {x} to rename")));
                }
                if self.has_head(y) {
                    return Err(BetaError::Label(format!("head {y} already present")));
                }
                let mut out = self.clone();
                for h in out.heads.iter_mut() {
                    if *h == x {
                        *h = y;
                    }
                }
                out.entries = self
                    .entries
                    .iter()
                    .map(|(&(t, h), v)| ((t, if h == x { y } else { h }), v.clone()))
                    .collect();
                Ok(out)
            }
        }
    }

    /// Semantic equality: same label sets (order ignored), rf-equal omega
    /// and entries, absent entries counting as zero.
    pub fn beta_eq(&self, other: &BetaElement) -> bool {
        let ts: BTreeSet<_> = self.tails.iter().collect();
        let to: BTreeSet<_> = other.tails.iter().collect();
        let hs: BTreeSet<_> = self.heads.iter().collect();
        let ho: BTreeSet<_> = other.heads.iter().collect();
        if ts != to || hs != ho {
            return false;
        }
        if !self.omega.rf_eq(&other.omega) {
            return false;
        }
        let mut keys: BTreeSet<(Label, Label)> = self.entries.keys().copied().collect();
        keys.extend(other.entries.keys().copied());
        keys.iter()
            .all(|&(t, h)| self.entry(t, h).rf_eq(&other.entry(t, h)))
    }

    /// A generic symbolic element for axiom checking: entry `(t, h)` is
    /// `s + u T_t` with fresh free symbols `s`, `u`, so both the raw
    /// bookkeeping and the strand-variable substitutions are exercised.
    pub fn generic(tails: &[Label], heads: &[Label]) -> BetaElement {
        let mut entries = BTreeMap::new();
        let mut k = 0usize;
        for &t in tails {
            for &h in heads {
                let s = RationalFn::var(VarId::symbol(&sym_name(k)));
                let u = RationalFn::var(VarId::symbol(&sym_name(k + 1)));
                k += 2;
                let v = &s + &(&u * &RationalFn::strand(t));
                entries.insert((t, h), v);
            }
        }
        BetaElement {
            omega: RationalFn::var(VarId::symbol("w")),
            tails: tails.to_vec(),
            heads: heads.to_vec(),
            entries,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BetaElementRepr::from(self)).expect("schema serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BetaElement> {
        let repr: BetaElementRepr = serde_json::from_value(v.clone())
            .map_err(|e| BetaError::Label(format!("bad element JSON: {e}")))?;
        repr.try_into()
    }
}

/// Which side of the array a label lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Tail,
    Head,
}

/// Short free-symbol names: "a", "b", ..., "aa", "ab", ... over an
/// alphabet without 'w', which is reserved for the generic omega.
fn sym_name(i: usize) -> String {
    const ALPHA: &[u8] = b"abcdefghijklmnopqrstuvxyz";
    let mut n = i + 1;
    let mut s = String::new();
    while n > 0 {
        let d = (n - 1) % ALPHA.len();
        s.insert(0, ALPHA[d] as char);
        n = (n - 1) / ALPHA.len();
    }
    s
}

/// Wire representation matching the JSON schema.
#[derive(Serialize, Deserialize)]
struct BetaElementRepr {
    omega: String,
    tails: Vec<Label>,
    heads: Vec<Label>,
    entries: Vec<EntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    t: Label,
    h: Label,
    v: String,
}

impl From<&BetaElement> for BetaElementRepr {
    fn from(e: &BetaElement) -> Self {
        BetaElementRepr {
            omega: e.omega.to_string(),
            tails: e.tails.clone(),
            heads: e.heads.clone(),
            entries: e
                .entries
                .iter()
                .map(|(&(t, h), v)| EntryRepr {
                    t,
                    h,
                    v: v.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<BetaElementRepr> for BetaElement {
    type Error = BetaError;
    fn try_from(r: BetaElementRepr) -> Result<BetaElement> {
        let omega = parse_expr(&r.omega)?;
        let mut entries = BTreeMap::new();
        for e in r.entries {
            entries.insert((e.t, e.h), parse_expr(&e.v)?);
        }
        BetaElement::new(omega, r.tails, r.heads, entries)
    }
}

impl fmt::Display for BetaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "omega = {}", self.omega)?;
        writeln!(f, "tails = {:?}, heads = {:?}", self.tails, self.heads)?;
        if self.entries.is_empty() {
            write!(f, "matrix part = 0")?;
        } else {
            for (&(t, h), v) in &self.entries {
                writeln!(f, "  (t{t}, h{h}) = {v}")?;
            }
        }
        Ok(())
    }
}
