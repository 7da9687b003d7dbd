//! Diagram ingestion and the invariant pipelines: PD codes, crossing
//! classification, stitch plans, and the Z^beta and Z^G computations.


use std::collections::BTreeMap;

use crate::betacalc::{BetaElement, BetaError, CrossingSign};
use crate::Label;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("orientation error: {0}")]
    Orientation(String),
    #[error(transparent)]
    Beta(#[from] BetaError),
}

type Result<T> = std::result::Result<T, TangleError>;

/// One crossing X[a,b,c,d]: the under-strand enters at `a` and leaves at
/// `c`; `b` and `d` are the over-strand edges, listed counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
}

/// A crossing with its orientation resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingSite {
    pub sign: CrossingSign,
    pub over_in: Label,
    pub under_in: Label,
}

/// A validated oriented planar diagram. Construction resolves the over
/// strand direction of every crossing and the partition of edges into
/// closed components.
#[derive(Debug, Clone)]
pub struct PDCode {
    crossings: Vec<Crossing>,
    sites: Vec<CrossingSite>,
    /// edge -> successor edge along the same component
    successor: BTreeMap<Label, Label>,
    /// cycles of edges, each starting at its least label, ordered by it
    components: Vec<Vec<Label>>,
}

/// The zero-crossing unknot has no PD text; it gets a dedicated value.
impl PDCode {
    pub fn unknot() -> PDCode {
        PDCode {
            crossings: Vec::new(),
            sites: Vec::new(),
            successor: BTreeMap::new(),
            components: vec![Vec::new()],
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn sites(&self) -> &[CrossingSite] {
        &self.sites
    }

    pub fn components(&self) -> &[Vec<Label>] {
        &self.components
    }

    pub fn edge_count(&self) -> usize {
        self.successor.len()
    }

    /// The next edge along the same strand.
    pub fn successor_of(&self, edge: Label) -> Label {
        self.successor[&edge]
    }

    /// Writhe: the sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.sites.iter().map(|s| s.sign.as_int()).sum()
    }

    fn component_of(&self, edge: Label) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&edge))
            .expect("edge belongs to a component")
    }
}

/// Parses the PD grammar: one or more crossings "X[a,b,c,d]" separated by
/// whitespace or ";". Validates edge multiplicity, resolves orientations,
/// and closes components.
pub fn parse_pd(text: &str) -> Result<PDCode> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut crossings = Vec::new();
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b';') {
            *pos += 1;
        }
    };
    let integer = |pos: &mut usize| -> Result<Label> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return Err(TangleError::Syntax {
                pos: start,
                msg: "expected an edge number".into(),
            });
        }
        text[start..*pos].parse().map_err(|_| TangleError::Syntax {
            pos: start,
            msg: "edge number out of range".into(),
        })
    };
    let expect = |pos: &mut usize, what: u8| -> Result<()> {
        if *pos < bytes.len() && bytes[*pos] == what {
            *pos += 1;
            Ok(())
        } else {
            Err(TangleError::Syntax {
                pos: *pos,
                msg: format!("expected '{}'", what as char),
            })
        }
    };
    skip(&mut pos);
    while pos < bytes.len() {
        expect(&mut pos, b'X')?;
        expect(&mut pos, b'[')?;
        let a = integer(&mut pos)?;
        expect(&mut pos, b',')?;
        let b = integer(&mut pos)?;
        expect(&mut pos, b',')?;
        let c = integer(&mut pos)?;
        expect(&mut pos, b',')?;
        let d = integer(&mut pos)?;
        expect(&mut pos, b']')?;
        crossings.push(Crossing { a, b, c, d });
        skip(&mut pos);
    }
    if crossings.is_empty() {
        return Err(TangleError::Syntax {
            pos,
            msg: "empty diagram (use the explicit unknot instead)".into(),
        });
    }
    build(crossings)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    UnderIn,
    UnderOut,
    OverB,
    OverD,
}

fn build(crossings: Vec<Crossing>) -> Result<PDCode> {
    let mut occ: BTreeMap<Label, Vec<(usize, Slot)>> = BTreeMap::new();
    for (i, x) in crossings.iter().enumerate() {
        if x.a == 0 || x.b == 0 || x.c == 0 || x.d == 0 {
            return Err(TangleError::Validation("edge labels start at 1".into()));
        }
        for (e, s) in [
            (x.a, Slot::UnderIn),
            (x.b, Slot::OverB),
            (x.c, Slot::UnderOut),
            (x.d, Slot::OverD),
        ] {
            occ.entry(e).or_default().push((i, s));
        }
    }
    for (e, places) in &occ {
        if places.len() != 2 {
            return Err(TangleError::Validation(format!(
                "edge {e} appears {} times; every edge must appear exactly twice",
                places.len()
            )));
        }
    }
    // resolve the over direction of each crossing: b_in[i] is true when
    // the over strand runs b -> d
    let mut b_in: Vec<Option<bool>> = vec![None; crossings.len()];
    loop {
        let mut progress = false;
        let mut complete = true;
        for (e, places) in &occ {
            // incoming status of each occurrence, when known
            let status = |(i, s): (usize, Slot), b_in: &[Option<bool>]| -> Option<bool> {
                match s {
                    Slot::UnderIn => Some(true),
                    Slot::UnderOut => Some(false),
                    Slot::OverB => b_in[i],
                    Slot::OverD => b_in[i].map(|v| !v),
                }
            };
            let force = |(i, s): (usize, Slot),
                         incoming: bool,
                         b_in: &mut [Option<bool>]|
             -> Result<bool> {
                let wanted = match s {
                    Slot::UnderIn => {
                        return if incoming {
                            Ok(false)
                        } else {
                            Err(TangleError::Orientation(format!(
                                "edge {e} leaves two crossings"
                            )))
                        }
                    }
                    Slot::UnderOut => {
                        return if incoming {
                            Err(TangleError::Orientation(format!(
                                "edge {e} enters two crossings"
                            )))
                        } else {
                            Ok(false)
                        }
                    }
                    Slot::OverB => incoming,
                    Slot::OverD => !incoming,
                };
                match b_in[i] {
                    None => {
                        b_in[i] = Some(wanted);
                        Ok(true)
                    }
                    Some(v) if v == wanted => Ok(false),
                    Some(_) => Err(TangleError::Orientation(format!(
                        "edge {e} forces crossing {} both ways",
                        i + 1
                    ))),
                }
            };
            let (p0, p1) = (places[0], places[1]);
            match (status(p0, &b_in), status(p1, &b_in)) {
                (Some(s0), Some(s1)) => {
                    if s0 == s1 {
                        return Err(TangleError::Orientation(format!(
                            "edge {e} is oriented the same way at both ends"
                        )));
                    }
                }
                (Some(s0), None) => progress |= force(p1, !s0, &mut b_in)?,
                (None, Some(s1)) => progress |= force(p0, !s1, &mut b_in)?,
                (None, None) => complete = false,
            }
        }
        if complete && !progress {
            break;
        }
        if !progress {
            // a cycle running entirely over: both orientations are
            // consistent, pick one deterministically
            let i = b_in.iter().position(|v| v.is_none()).expect("incomplete");
            b_in[i] = Some(false);
        }
    }
    let b_in: Vec<bool> = b_in.into_iter().map(|v| v.expect("resolved")).collect();
    let mut sites = Vec::new();
    let mut successor: BTreeMap<Label, Label> = BTreeMap::new();
    for (i, x) in crossings.iter().enumerate() {
        let (over_in, over_out, sign) = if b_in[i] {
            (x.b, x.d, CrossingSign::Negative)
        } else {
            (x.d, x.b, CrossingSign::Positive)
        };
        sites.push(CrossingSite {
            sign,
            over_in,
            under_in: x.a,
        });
        for (from, to) in [(x.a, x.c), (over_in, over_out)] {
            if successor.insert(from, to).is_some() {
                return Err(TangleError::Orientation(format!(
                    "edge {from} enters two crossings"
                )));
            }
        }
    }
    // cycle decomposition; successor is a permutation of the edge set
    let mut seen: BTreeMap<Label, bool> = successor.keys().map(|&e| (e, false)).collect();
    let mut components = Vec::new();
    let edges: Vec<Label> = successor.keys().copied().collect();
    for &start in &edges {
        if seen[&start] {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start, true);
        let mut e = successor[&start];
        while e != start {
            if *seen.get(&e).unwrap_or(&true) {
                return Err(TangleError::Validation(format!(
                    "edge {e} does not close a component"
                )));
            }
            seen.insert(e, true);
            cycle.push(e);
            e = successor[&e];
        }
        components.push(cycle);
    }
    Ok(PDCode {
        crossings,
        sites,
        successor,
        components,
    })
}

/// One component's stitch instructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitchGroup {
    pub surviving: Label,
    pub steps: Vec<(Label, Label, Label)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitchPlan {
    pub groups: Vec<StitchGroup>,
}

impl StitchPlan {
    pub fn len(&self) -> usize {
        self.groups.iter().map(|g| g.steps.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Traversal order per component from its basepoint (least edge label by
/// default, or the listed edge); each step stitches the running strand to
/// the next passage: gm(first, next -> first).
pub fn stitch_plan(pd: &PDCode, basepoints: &[Label]) -> Result<StitchPlan> {
    for &bp in basepoints {
        if !pd.successor.contains_key(&bp) && !pd.crossings.is_empty() {
            return Err(TangleError::Validation(format!(
                "basepoint {bp} is not an edge of the diagram"
            )));
        }
    }
    let mut groups = Vec::new();
    for cycle in &pd.components {
        if cycle.is_empty() {
            groups.push(StitchGroup {
                surviving: 1,
                steps: Vec::new(),
            });
            continue;
        }
        let bp = basepoints
            .iter()
            .copied()
            .find(|b| cycle.contains(b))
            .unwrap_or(cycle[0]);
        let start = cycle.iter().position(|&e| e == bp).expect("basepoint");
        let mut steps = Vec::new();
        for k in 1..cycle.len() {
            steps.push((bp, cycle[(start + k) % cycle.len()], bp));
        }
        groups.push(StitchGroup {
            surviving: bp,
            steps,
        });
    }
    Ok(StitchPlan { groups })
}

/// Z^beta: the disjoint union of one R-matrix per crossing, stitched
/// according to the plan. `stop_after` keeps the first that many
/// instructions for a partially glued tangle.
pub fn z_beta(pd: &PDCode, plan: &StitchPlan, stop_after: Option<usize>) -> Result<BetaElement> {
    if pd.crossings.is_empty() {
        let mut e = BetaElement::empty();
        for g in &plan.groups {
            e = e
                .insert_unit(crate::betacalc::LabelKind::Tail, g.surviving)?
                .insert_unit(crate::betacalc::LabelKind::Head, g.surviving)?;
        }
        return Ok(e);
    }
    let mut acc = BetaElement::empty();
    for site in &pd.sites {
        acc = acc.union(&BetaElement::r_element(site.sign, site.over_in, site.under_in)?)?;
    }
    let mut budget = stop_after.unwrap_or(usize::MAX);
    for g in &plan.groups {
        for &(x, y, z) in &g.steps {
            if budget == 0 {
                return Ok(acc);
            }
            acc = acc.gm(x, y, z)?;
            budget -= 1;
        }
    }
    Ok(acc)
}

/// Z^beta with the default stitch plan.
pub fn z_beta_full(pd: &PDCode) -> Result<BetaElement> {
    z_beta(pd, &stitch_plan(pd, &[])?, None)
}

/// Per-component signed over/under crossing counts: the collapsed
/// invariant Z^G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingProfile {
    pub per_component: Vec<(i64, i64)>,
}

pub fn z_g(pd: &PDCode) -> LinkingProfile {
    let mut per: Vec<(i64, i64)> = vec![(0, 0); pd.components.len()];
    for site in &pd.sites {
        let s = site.sign.as_int();
        per[pd.component_of(site.over_in)].0 += s;
        per[pd.component_of(site.under_in)].1 += s;
    }
    LinkingProfile { per_component: per }
}

impl std::fmt::Display for LinkingProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .per_component
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Knot table: one record per line, "name<TAB>pd"; "#" starts a comment.
pub fn parse_knot_table(text: &str) -> Result<Vec<(String, PDCode)>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, pd) = line.split_once('\t').ok_or_else(|| TangleError::Syntax {
            pos: ln + 1,
            msg: format!("line {}: expected \"name<TAB>pd\"", ln + 1),
        })?;
        out.push((name.to_string(), parse_pd(pd)?));
    }
    Ok(out)
}
