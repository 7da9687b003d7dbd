use std::fmt;

use serde::Serialize;

use super::{BicrossedSpace, RegisterSpace};
use crate::Label;

/// Outcome of one axiom check.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub pass: bool,
    pub trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub instance: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn result(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            if r.pass {
                writeln!(f, "AXIOM {} PASS", r.name)?;
            } else {
                let ce = r.counterexample.as_deref().unwrap_or("none recorded");
                writeln!(f, "AXIOM {} FAIL counterexample: {}", r.name, ce)?;
            }
        }
        Ok(())
    }
}

type Chain<'c, I> = &'c dyn Fn(
    &I,
    &<I as RegisterSpace>::Elem,
) -> Result<<I as RegisterSpace>::Elem, String>;

struct MonoidAxiom<'c, I: RegisterSpace> {
    name: &'static str,
    labels: &'static [Label],
    lhs: Chain<'c, I>,
    rhs: Chain<'c, I>,
}

fn run_axiom<I: RegisterSpace>(
    inst: &I,
    gen: &mut dyn FnMut(&[Label]) -> I::Elem,
    trials: usize,
    ax: &MonoidAxiom<'_, I>,
) -> AxiomResult {
    for _ in 0..trials {
        let p = gen(ax.labels);
        let l = (ax.lhs)(inst, &p);
        let r = (ax.rhs)(inst, &p);
        let (pass, detail) = match (&l, &r) {
            (Ok(a), Ok(b)) => (
                inst.eq(a, b),
                format!(
                    "input: {}; lhs: {}; rhs: {}",
                    inst.render(&p),
                    inst.render(a),
                    inst.render(b)
                ),
            ),
            (Err(e), _) | (_, Err(e)) => (false, format!("input: {}; error: {}", inst.render(&p), e)),
        };
        if !pass {
            return AxiomResult {
                name: ax.name.to_string(),
                pass: false,
                trials,
                counterexample: Some(detail),
            };
        }
    }
    AxiomResult {
        name: ax.name.to_string(),
        pass: true,
        trials,
        counterexample: None,
    }
}

/// Checks the monoid-theory and set-manipulation axioms on elements drawn
/// from `gen`. Register labels 1..4 are the working set, 5 and 6 are fresh,
/// 7 is a spectator.
pub fn monoid_axiom_suite<I: RegisterSpace>(
    inst: &I,
    instance_name: &str,
    gen: &mut dyn FnMut(&[Label]) -> I::Elem,
    trials: usize,
) -> AxiomReport {
    monoid_axiom_suite_prefixed(inst, instance_name, "", gen, trials)
}

fn monoid_axiom_suite_prefixed<I: RegisterSpace>(
    inst: &I,
    instance_name: &str,
    prefix: &str,
    gen: &mut dyn FnMut(&[Label]) -> I::Elem,
    trials: usize,
) -> AxiomReport {
    let axioms: Vec<MonoidAxiom<'_, I>> = vec![
        MonoidAxiom {
            name: "left-identity",
            labels: &[2, 7],
            lhs: &|i, p| i.unit(p, 1).and_then(|q| i.m(&q, 1, 2, 3)),
            rhs: &|i, p| i.rename(p, 2, 3),
        },
        MonoidAxiom {
            name: "right-identity",
            labels: &[1, 7],
            lhs: &|i, p| i.unit(p, 2).and_then(|q| i.m(&q, 1, 2, 3)),
            rhs: &|i, p| i.rename(p, 1, 3),
        },
        MonoidAxiom {
            name: "associativity",
            labels: &[1, 2, 3],
            lhs: &|i, p| i.m(p, 1, 2, 5).and_then(|q| i.m(&q, 5, 3, 6)),
            rhs: &|i, p| i.m(p, 2, 3, 5).and_then(|q| i.m(&q, 1, 5, 6)),
        },
        MonoidAxiom {
            name: "rename-inverse",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.rename(p, 1, 5).and_then(|q| i.rename(&q, 5, 1)),
            rhs: &|_, p| Ok(p.clone()),
        },
        MonoidAxiom {
            name: "rename-compose",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.rename(p, 1, 5).and_then(|q| i.rename(&q, 5, 6)),
            rhs: &|i, p| i.rename(p, 1, 6),
        },
        MonoidAxiom {
            name: "rename-then-delete",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.rename(p, 1, 5).and_then(|q| i.delete(&q, 5)),
            rhs: &|i, p| i.delete(p, 1),
        },
        MonoidAxiom {
            name: "multiply-then-delete",
            labels: &[1, 2, 3],
            lhs: &|i, p| i.m(p, 1, 2, 5).and_then(|q| i.delete(&q, 5)),
            rhs: &|i, p| i.delete(p, 1).and_then(|q| i.delete(&q, 2)),
        },
        MonoidAxiom {
            name: "unit-then-delete",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.unit(p, 5).and_then(|q| i.delete(&q, 5)),
            rhs: &|_, p| Ok(p.clone()),
        },
        MonoidAxiom {
            name: "multiply-then-rename",
            labels: &[1, 2, 3],
            lhs: &|i, p| i.m(p, 1, 2, 5).and_then(|q| i.rename(&q, 5, 6)),
            rhs: &|i, p| i.m(p, 1, 2, 6),
        },
        MonoidAxiom {
            name: "rename-then-multiply",
            labels: &[1, 2, 3],
            lhs: &|i, p| i.rename(p, 1, 5).and_then(|q| i.m(&q, 5, 2, 6)),
            rhs: &|i, p| i.m(p, 1, 2, 6),
        },
        MonoidAxiom {
            name: "unit-then-rename",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.unit(p, 5).and_then(|q| i.rename(&q, 5, 6)),
            rhs: &|i, p| i.unit(p, 6),
        },
        MonoidAxiom {
            name: "disjoint-commute-units",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.unit(p, 5).and_then(|q| i.unit(&q, 6)),
            rhs: &|i, p| i.unit(p, 6).and_then(|q| i.unit(&q, 5)),
        },
        MonoidAxiom {
            name: "disjoint-commute-unit-delete",
            labels: &[1, 2, 3, 4],
            lhs: &|i, p| i.unit(p, 5).and_then(|q| i.delete(&q, 1)),
            rhs: &|i, p| i.delete(p, 1).and_then(|q| i.unit(&q, 5)),
        },
    ];
    let mut results = Vec::new();
    for ax in &axioms {
        let mut named = run_axiom(inst, gen, trials, ax);
        named.name = format!("{prefix}{}", named.name);
        results.push(named);
    }
    AxiomReport {
        instance: instance_name.to_string(),
        results,
    }
}

struct TailMonoid<'a, B: BicrossedSpace>(&'a B);

impl<B: BicrossedSpace> RegisterSpace for TailMonoid<'_, B> {
    type Elem = B::Elem;

    fn labels(&self, e: &B::Elem) -> Vec<Label> {
        self.0.tails(e)
    }
    fn m(&self, e: &B::Elem, x: Label, y: Label, z: Label) -> Result<B::Elem, String> {
        self.0.tm(e, x, y, z)
    }
    fn unit(&self, e: &B::Elem, x: Label) -> Result<B::Elem, String> {
        self.0.te(e, x)
    }
    fn delete(&self, e: &B::Elem, x: Label) -> Result<B::Elem, String> {
        self.0.td(e, x)
    }
    fn rename(&self, e: &B::Elem, x: Label, y: Label) -> Result<B::Elem, String> {
        self.0.tr(e, x, y)
    }
    fn union(&self, _a: &B::Elem, _b: &B::Elem) -> Result<B::Elem, String> {
        Err("union is not part of the single-side monoid view".into())
    }
    fn eq(&self, a: &B::Elem, b: &B::Elem) -> bool {
        self.0.eq(a, b)
    }
    fn render(&self, e: &B::Elem) -> String {
        self.0.render(e)
    }
}

struct HeadMonoid<'a, B: BicrossedSpace>(&'a B);

impl<B: BicrossedSpace> RegisterSpace for HeadMonoid<'_, B> {
    type Elem = B::Elem;

    fn labels(&self, e: &B::Elem) -> Vec<Label> {
        self.0.heads(e)
    }
    fn m(&self, e: &B::Elem, x: Label, y: Label, z: Label) -> Result<B::Elem, String> {
        self.0.hm(e, x, y, z)
    }
    fn unit(&self, e: &B::Elem, x: Label) -> Result<B::Elem, String> {
        self.0.he(e, x)
    }
    fn delete(&self, e: &B::Elem, x: Label) -> Result<B::Elem, String> {
        self.0.hd(e, x)
    }
    fn rename(&self, e: &B::Elem, x: Label, y: Label) -> Result<B::Elem, String> {
        self.0.hr(e, x, y)
    }
    fn union(&self, _a: &B::Elem, _b: &B::Elem) -> Result<B::Elem, String> {
        Err("union is not part of the single-side monoid view".into())
    }
    fn eq(&self, a: &B::Elem, b: &B::Elem) -> bool {
        self.0.eq(a, b)
    }
    fn render(&self, e: &B::Elem) -> String {
        self.0.render(e)
    }
}

struct SwapAxiom<'c, B: BicrossedSpace> {
    name: &'static str,
    tails: &'static [Label],
    heads: &'static [Label],
    lhs: &'c dyn Fn(&B, &B::Elem) -> Result<B::Elem, String>,
    rhs: &'c dyn Fn(&B, &B::Elem) -> Result<B::Elem, String>,
}

/// Checks the tail-side and head-side monoid axioms plus the six swap
/// relations. `gen` draws an element with the requested tail and head
/// label sets.
pub fn bicrossed_axiom_suite<B: BicrossedSpace>(
    inst: &B,
    instance_name: &str,
    gen: &mut dyn FnMut(&[Label], &[Label]) -> B::Elem,
    trials: usize,
) -> AxiomReport {
    let mut results = Vec::new();

    let tail_view = TailMonoid(inst);
    let mut tail_gen = |tl: &[Label]| gen(tl, &[101, 102]);
    results.extend(
        monoid_axiom_suite_prefixed(&tail_view, instance_name, "tm-", &mut tail_gen, trials)
            .results,
    );

    let head_view = HeadMonoid(inst);
    let mut head_gen = |hl: &[Label]| gen(&[103, 104], hl);
    results.extend(
        monoid_axiom_suite_prefixed(&head_view, instance_name, "hm-", &mut head_gen, trials)
            .results,
    );

    let swaps: Vec<SwapAxiom<'_, B>> = vec![
        SwapAxiom {
            name: "sw-tm",
            tails: &[1, 2, 8],
            heads: &[3, 7],
            lhs: &|i, p| i.tm(p, 1, 2, 1).and_then(|q| i.sw(&q, 1, 3)),
            rhs: &|i, p| {
                i.sw(p, 1, 3)
                    .and_then(|q| i.sw(&q, 2, 3))
                    .and_then(|q| i.tm(&q, 1, 2, 1))
            },
        },
        SwapAxiom {
            name: "sw-hm",
            tails: &[1, 8],
            heads: &[3, 4, 7],
            lhs: &|i, p| i.hm(p, 3, 4, 3).and_then(|q| i.sw(&q, 1, 3)),
            rhs: &|i, p| {
                i.sw(p, 1, 3)
                    .and_then(|q| i.sw(&q, 1, 4))
                    .and_then(|q| i.hm(&q, 3, 4, 3))
            },
        },
        SwapAxiom {
            name: "sw-tail-rename",
            tails: &[1, 8],
            heads: &[2, 7],
            lhs: &|i, p| i.sw(p, 1, 2).and_then(|q| i.tr(&q, 1, 5)),
            rhs: &|i, p| i.tr(p, 1, 5).and_then(|q| i.sw(&q, 5, 2)),
        },
        SwapAxiom {
            name: "sw-head-rename",
            tails: &[1, 8],
            heads: &[2, 7],
            lhs: &|i, p| i.sw(p, 1, 2).and_then(|q| i.hr(&q, 2, 5)),
            rhs: &|i, p| i.hr(p, 2, 5).and_then(|q| i.sw(&q, 1, 5)),
        },
        SwapAxiom {
            name: "tail-unit-sw",
            tails: &[8],
            heads: &[2, 7],
            lhs: &|i, p| i.te(p, 1).and_then(|q| i.sw(&q, 1, 2)),
            rhs: &|i, p| i.te(p, 1),
        },
        SwapAxiom {
            name: "head-unit-sw",
            tails: &[1, 8],
            heads: &[7],
            lhs: &|i, p| i.he(p, 2).and_then(|q| i.sw(&q, 1, 2)),
            rhs: &|i, p| i.he(p, 2),
        },
    ];
    for ax in &swaps {
        let mut result = AxiomResult {
            name: ax.name.to_string(),
            pass: true,
            trials,
            counterexample: None,
        };
        for _ in 0..trials {
            let p = gen(ax.tails, ax.heads);
            let l = (ax.lhs)(inst, &p);
            let r = (ax.rhs)(inst, &p);
            let (pass, detail) = match (&l, &r) {
                (Ok(a), Ok(b)) => (
                    inst.eq(a, b),
                    format!(
                        "input: {}; lhs: {}; rhs: {}",
                        inst.render(&p),
                        inst.render(a),
                        inst.render(b)
                    ),
                ),
                (Err(e), _) | (_, Err(e)) => {
                    (false, format!("input: {}; error: {}", inst.render(&p), e))
                }
            };
            if !pass {
                result.pass = false;
                result.counterexample = Some(detail);
                break;
            }
        }
        results.push(result);
    }

    AxiomReport {
        instance: instance_name.to_string(),
        results,
    }
}
