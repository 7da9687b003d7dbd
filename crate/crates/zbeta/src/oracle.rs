//! Independent Alexander polynomial oracle built from the Wirtinger
//! presentation. Used to cross-check the corner entry of the main
//! invariant on table knots; shares no code path with the stitching
//! pipeline beyond the polynomial arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{mv_div_exact, univar_div_exact, LaurentPoly, RationalFn, VarId};
use crate::tangle::PDCode;
use crate::Label;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("the oracle only handles one-component diagrams; this one has {0}")]
    MultiComponent(usize),
    #[error("denominator is not a monomial unit: {0}")]
    NonMonomialDenominator(String),
    #[error("minor index out of range")]
    BadMinor,
}

type Result<T> = std::result::Result<T, OracleError>;

/// The oracle's variable. The pipeline's corner entry lives in the
/// surviving strand variable; callers rename before comparing.
pub fn oracle_var() -> VarId {
    VarId::strand(1)
}

fn t_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(oracle_var(), e)
}

/// Arc partition of the edges: the over strand runs through a crossing
/// without a break, so its incoming and outgoing edges belong to one arc.
fn arcs(pd: &PDCode) -> BTreeMap<Label, usize> {
    let mut parent: BTreeMap<Label, Label> = BTreeMap::new();
    for cycle in pd.components() {
        for &e in cycle {
            parent.insert(e, e);
        }
    }
    fn find(parent: &mut BTreeMap<Label, Label>, mut e: Label) -> Label {
        while parent[&e] != e {
            let up = parent[&parent[&e]];
            parent.insert(e, up);
            e = up;
        }
        e
    }
    for site in pd.sites() {
        let over_out = pd.successor_of(site.over_in);
        let (a, b) = (
            find(&mut parent, site.over_in),
            find(&mut parent, over_out),
        );
        parent.insert(a, b);
    }
    let mut ids: BTreeMap<Label, usize> = BTreeMap::new();
    let mut next = 0usize;
    let edges: Vec<Label> = parent.keys().copied().collect();
    let mut out = BTreeMap::new();
    for e in edges {
        let root = find(&mut parent, e);
        let id = *ids.entry(root).or_insert_with(|| {
            let v = next;
            next += 1;
            v
        });
        out.insert(e, id);
    }
    out
}

/// The full Wirtinger relation matrix: one row per crossing, one column
/// per arc. At a crossing of sign s, the outgoing under arc equals
/// T^s * incoming + (1 - T^s) * over, written as a zero row-sum relation.
fn relation_matrix(pd: &PDCode) -> (Vec<Vec<LaurentPoly>>, usize) {
    let arc = arcs(pd);
    let n = arc.values().copied().max().map_or(0, |m| m + 1);
    let mut rows = Vec::new();
    for site in pd.sites() {
        let s = site.sign.as_int();
        let mut row = vec![LaurentPoly::zero(); n];
        let a_in = arc[&site.under_in];
        let a_out = arc[&pd.successor_of(site.under_in)];
        let a_over = arc[&site.over_in];
        row[a_in] = &row[a_in] + &t_pow(s);
        row[a_over] = &row[a_over] + &(&LaurentPoly::one() - &t_pow(s));
        row[a_out] = &row[a_out] - &LaurentPoly::one();
        rows.push(row);
    }
    (rows, n)
}

/// Fraction-free Bareiss determinant over the Laurent polynomial ring.
/// Every division is exact; a zero pivot is repaired by row swap or the
/// determinant is zero.
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(j) = (k + 1..n).find(|&j| !m[j][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, j);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let prod = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&prod, &prev);
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    univar_div_exact(a, b)
        .or_else(|| mv_div_exact(a, b))
        .expect("Bareiss division is exact")
}

/// Cofactor expansion determinant; exponential, used only to cross-check
/// small matrices.
fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = LaurentPoly::zero();
    for (j, cell) in m[0].iter().enumerate() {
        if cell.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = cell * &cofactor_det(&minor);
        det = if j % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// Alexander polynomial of a one-component diagram: the determinant of
/// the Wirtinger matrix with row `drop_row` and column `drop_col`
/// removed, in canonical unit form. The zero-crossing unknot gives 1.
pub fn alexander_minor(pd: &PDCode, drop_row: usize, drop_col: usize) -> Result<LaurentPoly> {
    if pd.components().len() != 1 {
        return Err(OracleError::MultiComponent(pd.components().len()));
    }
    if pd.crossings().is_empty() {
        return Ok(LaurentPoly::one());
    }
    let (rows, n) = relation_matrix(pd);
    if drop_row >= rows.len() || drop_col >= n {
        return Err(OracleError::BadMinor);
    }
    let minor: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != drop_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != drop_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    let det = bareiss_det(minor.clone());
    if minor.len() <= 6 {
        debug_assert_eq!(det, cofactor_det(&minor), "determinant cross-check");
    }
    Ok(canonical_unit_form(&det))
}

pub fn alexander(pd: &PDCode) -> Result<LaurentPoly> {
    alexander_minor(pd, 0, 0)
}

/// Canonical representative of the unit class +-T^k * p: lowest exponent
/// zero, lowest coefficient positive. Zero maps to zero.
pub fn canonical_unit_form(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let content = p.monomial_content();
    let shifted = mv_div_exact(p, &LaurentPoly::term(BigInt::one(), content))
        .expect("monomial content divides");
    if lowest_coeff(&shifted).is_negative() {
        -&shifted
    } else {
        shifted
    }
}

fn lowest_coeff(p: &LaurentPoly) -> BigInt {
    p.terms()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::zero)
}

/// Whether a rational corner value and an oracle polynomial agree up to a
/// unit +-T^k. The corner of a closed knot must have a monomial
/// denominator; anything else is an error, not a mismatch.
pub fn compare_up_to_units(corner: &RationalFn, oracle: &LaurentPoly) -> Result<bool> {
    if corner.den().num_terms() != 1 {
        return Err(OracleError::NonMonomialDenominator(format!("{corner}")));
    }
    let flat = mv_div_exact(corner.num(), corner.den())
        .ok_or_else(|| OracleError::NonMonomialDenominator(format!("{corner}")))?;
    Ok(canonical_unit_form(&flat) == canonical_unit_form(oracle))
}
