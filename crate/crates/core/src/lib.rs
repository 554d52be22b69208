//! Superposition for fixed domains.
//!
//! Constrained clauses `Γ → Δ ∥ α` share a finite set of existential
//! variables. Saturation derives empty-claused constraints; a problem is
//! refuted over the Herbrand domain once those constraints cover every
//! ground instantiation of the existential variables.

pub mod calculus;
pub mod clause;
pub mod coverage;
pub mod frontend;
pub mod ground;
pub mod induction;
pub mod model;
pub mod ordering;
pub mod saturation;
pub mod term;

#[cfg(test)]
mod properties;
