//! Exact computation of the beta-calculus tangle invariant, the generic
//! labeled-register (meta-monoid) machinery behind it, diagram ingestion
//! from planar-diagram codes, and an independent Alexander polynomial
//! oracle used to cross-validate the invariant's corner element.

pub mod algebra;
pub mod betacalc;
pub mod metamonoid;
pub mod oracle;
pub mod tangle;

/// Register / strand label. Diagram edge labels and axiom-harness register
/// names are both plain small integers.
pub type Label = u32;

pub use algebra::{LaurentPoly, RationalFn, VarId};
pub use betacalc::{BetaElement, CrossingSign};
pub use tangle::PDCode;


