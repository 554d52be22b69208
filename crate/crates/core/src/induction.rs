//! The induction rule for a query set `H` whose clauses share a
//! variable-only constraint `v₁≈x₁, …, vₘ≈xₘ`.
//!
//! From the premises `C₁ ∥ α, …, Cₙ ∥ α` and substitutions `ρ₁, ρ₂` with
//! `[ρ₁] < [ρ₂]`, the rule derives `Dρ₁ ∥ αρ₂` for every clause `D` of the
//! conjunctive normal form of `¬C₁ ∨ … ∨ ¬Cₙ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::calculus::{InferenceRecord, Rule, Selection};
use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::model::{ModelHandle, Tri};
use crate::term::{Signature, Substitution, Term, Var};

/// A well-founded ordering on model classes, lifted to non-ground terms.
pub trait ClassOrder {
    fn class_less(&self, s: &Term, t: &Term) -> Tri;
}

impl ClassOrder for ModelHandle {
    fn class_less(&self, s: &Term, t: &Term) -> Tri {
        ModelHandle::class_less(self, s, t)
    }
}

/// An ordering given as an increasing chain of ground class representatives.
#[derive(Clone, Debug, Default)]
pub struct AssumedOrder {
    pub chain: Vec<Term>,
}

impl ClassOrder for AssumedOrder {
    fn class_less(&self, s: &Term, t: &Term) -> Tri {
        let pos = |x: &Term| self.chain.iter().position(|c| c == x);
        match (pos(s), pos(t)) {
            (Some(i), Some(j)) if i < j => Tri::True,
            (Some(_), Some(_)) => Tri::False,
            _ => Tri::Unknown,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Justification {
    Heuristic,
    User,
}

/// One application of the induction rule. `rho1[i]` and `rho2[i]` are the
/// images of the variable bound to the `i`-th existential variable.
#[derive(Clone, Debug)]
pub struct InductionDirective {
    pub query: Vec<ConstrainedClause>,
    pub premises: Vec<ConstrainedClause>,
    pub rho1: Vec<Term>,
    pub rho2: Vec<Term>,
    pub justification: Justification,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InductionError {
    #[error("condition (i) violated: the premises must be the whole query set")]
    NotWholeQuery,
    #[error("condition (ii) violated: constraint {0} is not of the form v₁≈x₁,…,vₘ≈xₘ with distinct variables")]
    NotVariableConstraint(String),
    #[error(
        "condition (iii) violated: variable {0} of a premise does not occur in the constraint"
    )]
    VariableOutsideConstraint(String),
    #[error("condition (iv) violated: [{0}] < [{1}] is {2}")]
    NotSmaller(String, String, &'static str),
    #[error("substitutions must give one term per existential variable")]
    Arity,
    #[error("substitution term {0} has the wrong sort")]
    Sort(String),
}

impl InductionError {
    /// The violated condition, as a roman numeral.
    pub fn condition(&self) -> Option<&'static str> {
        match self {
            InductionError::NotWholeQuery => Some("i"),
            InductionError::NotVariableConstraint(_) => Some("ii"),
            InductionError::VariableOutsideConstraint(_) => Some("iii"),
            InductionError::NotSmaller(..) => Some("iv"),
            _ => None,
        }
    }
}

/// Clauses of the conjunctive normal form of `¬C₁ ∨ … ∨ ¬Cₙ`, dropping
/// tautologies and duplicates.
pub fn cnf_of_negation(h: &[Clause]) -> Vec<Clause> {
    if h.iter().any(Clause::is_empty) {
        return Vec::new();
    }
    let mut acc: Vec<(Vec<Equation>, Vec<Equation>)> = vec![(Vec::new(), Vec::new())];
    for c in h {
        let mut next = Vec::new();
        for (ante, succ) in &acc {
            for e in &c.antecedent {
                let mut s = succ.clone();
                if !s.contains(e) {
                    s.push(e.clone());
                }
                next.push((ante.clone(), s));
            }
            for e in &c.succedent {
                let mut a = ante.clone();
                if !a.contains(e) {
                    a.push(e.clone());
                }
                next.push((a, succ.clone()));
            }
        }
        acc = next;
    }
    let mut out: Vec<Clause> = Vec::new();
    for (a, s) in acc {
        let c = Clause::new(a, s);
        if !c.is_tautology() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// The clause part of `cc` with its constraint variables renamed to
/// `x₀, …, xₘ₋₁` and its other variables above them, if the constraint is
/// variable-only with distinct variables.
fn aligned(cc: &ConstrainedClause) -> Option<Clause> {
    let m = cc.constraint().terms.len() as u32;
    let mut map: BTreeMap<Var, Term> = BTreeMap::new();
    for (i, t) in cc.constraint().terms.iter().enumerate() {
        let v = t.as_var()?;
        if map
            .insert(v, Term::Var(Var::universal(i as u32, v.sort)))
            .is_some()
        {
            return None;
        }
    }
    let mut next = m;
    for v in cc.clause().vars() {
        map.entry(v).or_insert_with(|| {
            next += 1;
            Term::Var(Var::universal(next - 1, v.sort))
        });
    }
    Some(cc.clause().apply(&Substitution::from_pairs(map)))
}

fn alpha_vars(sig: &Signature) -> Vec<Var> {
    sig.existentials()
        .iter()
        .enumerate()
        .map(|(i, e)| Var::universal(i as u32, e.sort))
        .collect()
}

fn same_set(a: &[ConstrainedClause], b: &[ConstrainedClause]) -> bool {
    let x: BTreeSet<&ConstrainedClause> = a.iter().collect();
    let y: BTreeSet<&ConstrainedClause> = b.iter().collect();
    x == y
}

/// Checks conditions (i) to (iv) and returns the conclusions.
pub fn induction_conclusions(
    sig: &Signature,
    directive: &InductionDirective,
    order: &dyn ClassOrder,
) -> Result<Vec<InferenceRecord>, InductionError> {
    if !same_set(&directive.query, &directive.premises) {
        return Err(InductionError::NotWholeQuery);
    }
    for p in &directive.premises {
        if aligned(p).is_none() {
            return Err(InductionError::NotVariableConstraint(
                p.constraint_display(sig).to_string(),
            ));
        }
        let cv = p.constraint().vars();
        if let Some(v) = p.clause().vars().into_iter().find(|v| !cv.contains(v)) {
            return Err(InductionError::VariableOutsideConstraint(
                sig.term(&Term::Var(v)).to_string(),
            ));
        }
    }
    check_substitutions(sig, directive)?;
    for (a, b) in directive.rho1.iter().zip(&directive.rho2) {
        match order.class_less(a, b) {
            Tri::True => {}
            Tri::False => {
                return Err(InductionError::NotSmaller(
                    sig.term(a).to_string(),
                    sig.term(b).to_string(),
                    "false",
                ))
            }
            Tri::Unknown => {
                return Err(InductionError::NotSmaller(
                    sig.term(a).to_string(),
                    sig.term(b).to_string(),
                    "not certified",
                ))
            }
        }
    }
    induction_conclusions_unchecked(sig, directive)
}

fn check_substitutions(
    sig: &Signature,
    directive: &InductionDirective,
) -> Result<(), InductionError> {
    let vars = alpha_vars(sig);
    if directive.rho1.len() != vars.len() || directive.rho2.len() != vars.len() {
        return Err(InductionError::Arity);
    }
    for (t, v) in directive
        .rho1
        .iter()
        .chain(&directive.rho2)
        .zip(vars.iter().chain(&vars))
    {
        if sig.check_term(t).ok() != Some(v.sort) || t.has_existential() {
            return Err(InductionError::Sort(sig.term(t).to_string()));
        }
    }
    Ok(())
}

/// Builds the conclusions without checking conditions (i) to (iv). Exists
/// to reproduce what goes wrong when a condition is dropped.
pub fn induction_conclusions_unchecked(
    sig: &Signature,
    directive: &InductionDirective,
) -> Result<Vec<InferenceRecord>, InductionError> {
    check_substitutions(sig, directive)?;
    let m = directive.rho1.len() as u32;
    let aligned_parts: Vec<Option<Clause>> = directive.premises.iter().map(aligned).collect();
    let all_aligned = aligned_parts.iter().all(Option::is_some);
    let parts: Vec<Clause> = aligned_parts
        .into_iter()
        .zip(&directive.premises)
        .map(|(a, p)| a.unwrap_or_else(|| p.clause().clone()))
        .collect();
    let top = parts
        .iter()
        .flat_map(|c| c.vars())
        .map(|v| v.id + 1)
        .max()
        .unwrap_or(0)
        .max(m);
    let shift = |t: &Term| t.shift(top);
    let rho1: Vec<Term> = directive.rho1.iter().map(shift).collect();
    let rho2: Vec<Term> = directive.rho2.iter().map(shift).collect();
    let vars = alpha_vars(sig);
    let s1 = Substitution::from_pairs(vars.iter().copied().zip(rho1.iter().cloned()));
    // A premise constraint that is not a variable tuple is instantiated by ρ₂.
    let constraint = match directive.premises.first() {
        Some(p) if !all_aligned => p.constraint().apply(&Substitution::from_pairs(
            vars.iter().copied().zip(rho2.iter().cloned()),
        )),
        _ => Constraint::new(rho2.clone()),
    };
    let mut out = Vec::new();
    for d in cnf_of_negation(&parts) {
        let conclusion = ConstrainedClause::canonical(constraint.clone(), d.apply(&s1));
        out.push(InferenceRecord {
            rule: Rule::Ind,
            premises: Vec::new(),
            unifiers: vec![
                Substitution::from_pairs(vars.iter().copied().zip(rho1.iter().cloned())),
                Substitution::from_pairs(vars.iter().copied().zip(rho2.iter().cloned())),
            ],
            selection: Selection::default(),
            conclusion,
        });
    }
    Ok(out)
}

/// Whether `h` can serve as a query set: a common variable-only constraint
/// covering all clause variables.
pub fn is_valid_query(h: &[ConstrainedClause]) -> bool {
    !h.is_empty()
        && h.iter().all(|p| {
            let cv = p.constraint().vars();
            aligned(p).is_some() && p.clause().vars().is_subset(&cv)
        })
}

/// Substitution pairs `(ρ₁, ρ₂)` suggested by a derived clause: `ρ₂` is read
/// off its constraint, which must be a proper instance of the query
/// constraint, and `ρ₁` picks certified smaller strict subterms of it.
pub fn heuristic_candidates(
    derived: &ConstrainedClause,
    order: &dyn ClassOrder,
) -> Vec<(Vec<Term>, Vec<Term>)> {
    let rho2 = derived.constraint().terms.clone();
    let mut seen = BTreeSet::new();
    let linear = rho2.iter().all(|t| t.is_var() && seen.insert(t.clone()));
    if linear {
        return Vec::new();
    }
    let mut options: Vec<Vec<Term>> = Vec::new();
    for t in &rho2 {
        let mut opts: Vec<Term> = Vec::new();
        if t.is_var() {
            opts.push(t.clone());
        } else {
            for s in t.strict_subterms() {
                if !opts.contains(s) && order.class_less(s, t) == Tri::True {
                    opts.push(s.clone());
                }
            }
        }
        if opts.is_empty() {
            return Vec::new();
        }
        options.push(opts);
    }
    let mut out: Vec<Vec<Term>> = vec![Vec::new()];
    for opts in &options {
        out = out
            .iter()
            .flat_map(|pre| {
                opts.iter()
                    .map(move |o| [pre.clone(), vec![o.clone()]].concat())
            })
            .collect();
        out.truncate(64);
    }
    out.into_iter()
        .filter(|r1| r1.iter().zip(&rho2).any(|(a, b)| a != b))
        .map(|r1| (r1, rho2.clone()))
        .collect()
}
