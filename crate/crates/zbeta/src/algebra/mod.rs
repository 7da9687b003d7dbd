//! Exact sparse arithmetic for multivariate Laurent polynomials and
//! rational functions over the integers, plus the text grammar used by the
//! CLI and the JSON schema.

mod parse;
mod poly;
mod rational;

pub use parse::parse_expr;
pub use poly::{LaurentPoly, Monomial};
pub(crate) use poly::{mv_div_exact, univar_div_exact};
pub use rational::RationalFn;

use crate::Label;
use std::fmt;

/// Errors out of the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("substitution produced a zero denominator")]
    ZeroDenominator,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// A polynomial variable: either the strand variable `T_i` tied to a tail
/// label `i`, or a free symbol used by the symbolic axiom harness.
///
/// The derived ordering (strand variables first, then symbols, each by
/// index) fixes the deterministic monomial order used for rendering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Strand(Label),
    Symbol(String),
}

impl VarId {
    pub fn strand(i: Label) -> Self {
        VarId::Strand(i)
    }

    /// A free symbol. Names must be non-empty and alphabetic so that
    /// rendered expressions stay inside the grammar. A name of the form
    /// `T<digits>` would collide with strand variables and is rejected.
    pub fn symbol(name: &str) -> Self {
        assert!(
            !name.is_empty() && name.chars().all(|c| c.is_ascii_alphabetic()),
            "free symbol names must be nonempty ASCII letters, got {name:?}"
        );
        VarId::Symbol(name.to_string())
    }

    pub fn is_strand(&self) -> bool {
        matches!(self, VarId::Strand(_))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Strand(i) => write!(f, "T{i}"),
            VarId::Symbol(s) => write!(f, "{s}"),
        }
    }
}

/// Render a rational function in the expression grammar. Deterministic:
/// variables sorted by (kind, index), monomials graded-lexicographic.
pub fn render_expr(f: &RationalFn) -> String {
    f.to_string()
}
