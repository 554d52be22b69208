//! The inference rules on constrained clauses.
//!
//! Every rule first enumerates candidate selections together with a unifier
//! and then hands them to [`Calculus::conclude`], which checks all side
//! conditions and builds the conclusion. The same function re-verifies
//! recorded inferences after the fact.

use std::cell::OnceCell;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::ordering::{LitRef, OrderingSpec};
use crate::term::{Bindings, Position, Signature, Substitution, Term, Var};

pub type ClauseId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    Input,
    EqRes,
    EqFact,
    SupR,
    SupL,
    ConSup,
    EqElim,
    GenEqElim,
    Ind,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Input => "Input",
            Rule::EqRes => "EqRes",
            Rule::EqFact => "EqFact",
            Rule::SupR => "SupR",
            Rule::SupL => "SupL",
            Rule::ConSup => "ConSup",
            Rule::EqElim => "EqElim",
            Rule::GenEqElim => "GenEqElim",
            Rule::Ind => "Ind",
        };
        write!(f, "{s}")
    }
}

/// Which rule set replaces equality elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CalculusVariant {
    /// EqElim on empty-claused second premises.
    Sfd,
    /// GenEqElim on arbitrary second premises.
    SfdGeneral,
}

/// What an inference acted on. Literal references carry a flag telling
/// whether the equation is read right-to-left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub lit: Option<(LitRef, bool)>,
    pub target: Option<(LitRef, bool)>,
    pub slot: Option<usize>,
    pub position: Option<Position>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferenceRecord {
    pub rule: Rule,
    pub premises: Vec<ClauseId>,
    pub unifiers: Vec<Substitution>,
    pub selection: Selection,
    pub conclusion: ConstrainedClause,
}

#[derive(Clone, Copy)]
pub struct Premise<'a> {
    pub id: ClauseId,
    pub clause: &'a ConstrainedClause,
}

impl<'a> Premise<'a> {
    pub fn new(id: ClauseId, clause: &'a ConstrainedClause) -> Premise<'a> {
        Premise { id, clause }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("selection does not fit the premises")]
    Shape,
    #[error("substitution is not a unifier of the required pairs")]
    NotUnifier,
    #[error("selected literal is not maximal")]
    NotMaximal,
    #[error("selected literal is not strictly maximal")]
    NotStrictlyMaximal,
    #[error("orientation condition violated")]
    Orientation,
    #[error("rewritten position holds a variable")]
    VariablePosition,
    #[error("second premise must have an empty clausal part")]
    NonEmptyPremise,
    #[error("rule is not part of the active calculus")]
    WrongVariant,
}

pub struct Calculus<'a> {
    pub sig: &'a Signature,
    pub ord: &'a OrderingSpec,
    pub variant: CalculusVariant,
}

/// Applies without re-sorting, so literal indices stay valid.
fn inst(c: &Clause, s: &Substitution) -> Clause {
    Clause {
        antecedent: c.antecedent.iter().map(|e| e.apply(s)).collect(),
        succedent: c.succedent.iter().map(|e| e.apply(s)).collect(),
    }
}

fn oriented(e: &Equation, flip: bool) -> (&Term, &Term) {
    let (a, b) = e.sides();
    if flip {
        (b, a)
    } else {
        (a, b)
    }
}

fn literal(c: &Clause, l: LitRef) -> Option<&Equation> {
    match l {
        LitRef::Ante(i) => c.antecedent.get(i),
        LitRef::Succ(i) => c.succedent.get(i),
    }
}

fn without(eqs: &[Equation], skip: Option<usize>) -> Vec<Equation> {
    eqs.iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .map(|(_, e)| e.clone())
        .collect()
}

fn orientations(e: &Equation) -> Vec<bool> {
    if e.is_trivial() {
        vec![false]
    } else {
        vec![false, true]
    }
}

fn all_vars(parts: &[(&Constraint, &Clause)]) -> Vec<Var> {
    let mut vs = std::collections::BTreeSet::new();
    for (a, c) in parts {
        vs.extend(a.vars());
        vs.extend(c.vars());
    }
    vs.into_iter().collect()
}

impl<'a> Calculus<'a> {
    pub fn new(
        sig: &'a Signature,
        ord: &'a OrderingSpec,
        variant: CalculusVariant,
    ) -> Calculus<'a> {
        Calculus { sig, ord, variant }
    }

    fn same_sort(&self, s: &Term, t: &Term) -> bool {
        self.sig.sort_of(s) == self.sig.sort_of(t)
    }

    /// Drops `true ≈ true` from the antecedent.
    fn condense(&self, ante: Vec<Equation>) -> Vec<Equation> {
        ante.into_iter()
            .filter(|e| !(e.is_trivial() && e.is_predicative(self.sig)))
            .collect()
    }

    fn finish(
        &self,
        constraint: Constraint,
        ante: Vec<Equation>,
        succ: Vec<Equation>,
    ) -> ConstrainedClause {
        ConstrainedClause::canonical(constraint, Clause::new(ante, succ))
    }

    fn offset(p1: &ConstrainedClause) -> u32 {
        p1.max_var_id().map_or(0, |m| m + 1)
    }

    /// Checks the side conditions of one inference and builds its conclusion.
    pub fn conclude(
        &self,
        rule: Rule,
        p1: &ConstrainedClause,
        p2: Option<&ConstrainedClause>,
        sel: &Selection,
        sigma: &Substitution,
    ) -> Result<ConstrainedClause, Violation> {
        let ord = self.ord;
        let (a1, c1) = (p1.constraint(), p1.clause());
        let shifted = p2.map(|p| p.shifted_parts(Self::offset(p1)));
        let c1s = inst(c1, sigma);
        match rule {
            Rule::EqRes => {
                let (LitRef::Ante(i), _) = sel.lit.ok_or(Violation::Shape)? else {
                    return Err(Violation::Shape);
                };
                let e = c1.antecedent.get(i).ok_or(Violation::Shape)?;
                let (s, t) = e.sides();
                if sigma.apply(s) != sigma.apply(t) {
                    return Err(Violation::NotUnifier);
                }
                if !ord.is_maximal(&c1s, LitRef::Ante(i)) {
                    return Err(Violation::NotMaximal);
                }
                Ok(self.finish(
                    a1.apply(sigma),
                    without(&c1s.antecedent, Some(i)),
                    c1s.succedent,
                ))
            }
            Rule::EqFact => {
                let (LitRef::Succ(i), fi) = sel.lit.ok_or(Violation::Shape)? else {
                    return Err(Violation::Shape);
                };
                let (LitRef::Succ(j), fj) = sel.target.ok_or(Violation::Shape)? else {
                    return Err(Violation::Shape);
                };
                if i == j {
                    return Err(Violation::Shape);
                }
                let (s, t) = oriented(c1.succedent.get(i).ok_or(Violation::Shape)?, fi);
                let (s2, t2) = oriented(c1.succedent.get(j).ok_or(Violation::Shape)?, fj);
                let (ss, ts) = (sigma.apply(s), sigma.apply(t));
                if ss != sigma.apply(s2) {
                    return Err(Violation::NotUnifier);
                }
                if !ord.is_maximal(&c1s, LitRef::Succ(i)) {
                    return Err(Violation::NotMaximal);
                }
                if ord.compare(&ts, &ss).is_ge() {
                    return Err(Violation::Orientation);
                }
                let mut ante = c1s.antecedent.clone();
                ante.push(Equation::new(ts, sigma.apply(t2)));
                Ok(self.finish(
                    a1.apply(sigma),
                    self.condense(ante),
                    without(&c1s.succedent, Some(i)),
                ))
            }
            Rule::SupR | Rule::SupL | Rule::ConSup | Rule::EqElim | Rule::GenEqElim => {
                let (a2, c2) = shifted.ok_or(Violation::Shape)?;
                let c2s = inst(&c2, sigma);
                let (LitRef::Succ(i), fi) = sel.lit.ok_or(Violation::Shape)? else {
                    return Err(Violation::Shape);
                };
                let (l, r) = oriented(c1.succedent.get(i).ok_or(Violation::Shape)?, fi);
                let (ls, rs) = (sigma.apply(l), sigma.apply(r));
                if !ord.is_strictly_maximal(&c1s, LitRef::Succ(i)) {
                    return Err(Violation::NotStrictlyMaximal);
                }
                if ord.compare(&rs, &ls).is_ge() {
                    return Err(Violation::Orientation);
                }
                let pos = sel.position.as_ref().ok_or(Violation::Shape)?;
                match rule {
                    Rule::SupR | Rule::SupL => {
                        let (tl, ft) = sel.target.ok_or(Violation::Shape)?;
                        let (left, j) = match (rule, tl) {
                            (Rule::SupL, LitRef::Ante(j)) => (true, j),
                            (Rule::SupR, LitRef::Succ(j)) => (false, j),
                            _ => return Err(Violation::Shape),
                        };
                        let (s, t) = oriented(literal(&c2, tl).ok_or(Violation::Shape)?, ft);
                        let sub = s.at(pos).ok_or(Violation::Shape)?;
                        if sub.is_var() {
                            return Err(Violation::VariablePosition);
                        }
                        if sigma.apply(sub) != ls {
                            return Err(Violation::NotUnifier);
                        }
                        if a1.apply(sigma) != a2.apply(sigma) {
                            return Err(Violation::NotUnifier);
                        }
                        let (ss, ts) = (sigma.apply(s), sigma.apply(t));
                        if left {
                            if !ord.is_maximal(&c2s, tl) {
                                return Err(Violation::NotMaximal);
                            }
                        } else if !ord.is_strictly_maximal(&c2s, tl) {
                            return Err(Violation::NotStrictlyMaximal);
                        }
                        if ord.compare(&ts, &ss).is_ge() {
                            return Err(Violation::Orientation);
                        }
                        let rewritten = Equation::new(
                            ss.replace_at(pos, &rs).map_err(|_| Violation::Shape)?,
                            ts,
                        );
                        let mut ante = c1s.antecedent.clone();
                        let mut succ = without(&c1s.succedent, Some(i));
                        if left {
                            ante.extend(without(&c2s.antecedent, Some(j)));
                            ante.push(rewritten);
                            succ.extend(c2s.succedent);
                            ante = self.condense(ante);
                        } else {
                            ante.extend(c2s.antecedent);
                            succ.extend(without(&c2s.succedent, Some(j)));
                            succ.push(rewritten);
                        }
                        Ok(self.finish(a1.apply(sigma), ante, succ))
                    }
                    Rule::ConSup => {
                        let k = sel.slot.ok_or(Violation::Shape)?;
                        let target = a2.terms.get(k).ok_or(Violation::Shape)?;
                        let sub = target.at(pos).ok_or(Violation::Shape)?;
                        if sub.is_var() {
                            return Err(Violation::VariablePosition);
                        }
                        if sigma.apply(sub) != ls {
                            return Err(Violation::NotUnifier);
                        }
                        let mut a2r = a2.clone();
                        a2r.terms[k] = target.replace_at(pos, r).map_err(|_| Violation::Shape)?;
                        let mut ante: Vec<Equation> = a1
                            .terms
                            .iter()
                            .zip(&a2r.terms)
                            .map(|(x, y)| Equation::new(sigma.apply(x), sigma.apply(y)))
                            .collect();
                        ante.extend(c1s.antecedent);
                        ante.extend(c2s.antecedent);
                        let mut succ = without(&c1s.succedent, Some(i));
                        succ.extend(c2s.succedent);
                        Ok(self.finish(a2r.apply(sigma), ante, succ))
                    }
                    _ => {
                        let general = rule == Rule::GenEqElim;
                        if general != (self.variant == CalculusVariant::SfdGeneral) {
                            return Err(Violation::WrongVariant);
                        }
                        if !general && !c2.is_empty() {
                            return Err(Violation::NonEmptyPremise);
                        }
                        let k = sel.slot.ok_or(Violation::Shape)?;
                        let target = a2.terms.get(k).ok_or(Violation::Shape)?;
                        let sub = target.at(pos).ok_or(Violation::Shape)?;
                        if sub.is_var() {
                            return Err(Violation::VariablePosition);
                        }
                        if sigma.apply(sub) != rs {
                            return Err(Violation::NotUnifier);
                        }
                        let mut a2l = a2.clone();
                        a2l.terms[k] = target.replace_at(pos, l).map_err(|_| Violation::Shape)?;
                        if general {
                            let mut ante: Vec<Equation> = a1
                                .terms
                                .iter()
                                .zip(&a2l.terms)
                                .map(|(x, y)| Equation::new(sigma.apply(x), sigma.apply(y)))
                                .collect();
                            ante.extend(c1s.antecedent);
                            ante.extend(c2s.antecedent);
                            let mut succ = without(&c1s.succedent, Some(i));
                            succ.extend(c2s.succedent);
                            Ok(self.finish(a2l.apply(sigma), ante, succ))
                        } else {
                            if a1.apply(sigma) != a2l.apply(sigma) {
                                return Err(Violation::NotUnifier);
                            }
                            Ok(self.finish(
                                a1.apply(sigma),
                                c1s.antecedent,
                                without(&c1s.succedent, Some(i)),
                            ))
                        }
                    }
                }
            }
            Rule::Input | Rule::Ind => Err(Violation::Shape),
        }
    }

    /// Re-checks a recorded inference against the premises it names.
    pub fn audit(
        &self,
        rec: &InferenceRecord,
        p1: &ConstrainedClause,
        p2: Option<&ConstrainedClause>,
    ) -> Result<(), Violation> {
        let sigma = rec.unifiers.first().ok_or(Violation::Shape)?;
        let c = self.conclude(rec.rule, p1, p2, &rec.selection, sigma)?;
        if c == rec.conclusion {
            Ok(())
        } else {
            Err(Violation::Shape)
        }
    }

    fn record(
        &self,
        rule: Rule,
        p1: Premise<'_>,
        p2: Option<Premise<'_>>,
        sel: Selection,
        sigma: Substitution,
    ) -> Option<InferenceRecord> {
        let conclusion = self
            .conclude(rule, p1.clause, p2.map(|p| p.clause), &sel, &sigma)
            .ok()?;
        let mut premises = vec![p1.id];
        premises.extend(p2.map(|p| p.id));
        Some(InferenceRecord {
            rule,
            premises,
            unifiers: vec![sigma],
            selection: sel,
            conclusion,
        })
    }

    pub fn equality_resolution(&self, p: Premise<'_>) -> Vec<InferenceRecord> {
        let c = p.clause.clause();
        let vars = all_vars(&[(p.clause.constraint(), c)]);
        let mut out = Vec::new();
        for (i, e) in c.antecedent.iter().enumerate() {
            let (s, t) = e.sides();
            let mut b = Bindings::default();
            if !b.unify(s, t) {
                continue;
            }
            let sel = Selection {
                lit: Some((LitRef::Ante(i), false)),
                ..Selection::default()
            };
            out.extend(self.record(
                Rule::EqRes,
                p,
                None,
                sel,
                b.to_substitution(vars.iter().copied()),
            ));
        }
        out
    }

    pub fn equality_factoring(&self, p: Premise<'_>) -> Vec<InferenceRecord> {
        let c = p.clause.clause();
        let vars = all_vars(&[(p.clause.constraint(), c)]);
        let mut out = Vec::new();
        for (i, e) in c.succedent.iter().enumerate() {
            for (j, f) in c.succedent.iter().enumerate() {
                if i == j {
                    continue;
                }
                for fi in orientations(e) {
                    for fj in orientations(f) {
                        let (s, _) = oriented(e, fi);
                        let (s2, _) = oriented(f, fj);
                        if !self.same_sort(s, s2) {
                            continue;
                        }
                        let mut b = Bindings::default();
                        if !b.unify(s, s2) {
                            continue;
                        }
                        let sel = Selection {
                            lit: Some((LitRef::Succ(i), fi)),
                            target: Some((LitRef::Succ(j), fj)),
                            ..Selection::default()
                        };
                        out.extend(self.record(
                            Rule::EqFact,
                            p,
                            None,
                            sel,
                            b.to_substitution(vars.iter().copied()),
                        ));
                    }
                }
            }
        }
        out
    }

    fn superposition(&self, p1: Premise<'_>, p2: Premise<'_>, left: bool) -> Vec<InferenceRecord> {
        let (a1, c1) = (p1.clause.constraint(), p1.clause.clause());
        let targets = if left {
            &p2.clause.clause().antecedent
        } else {
            &p2.clause.clause().succedent
        };
        if c1.succedent.is_empty() || targets.is_empty() {
            return Vec::new();
        }
        let (a2, c2) = p2.clause.shifted_parts(Self::offset(p1.clause));
        let vars = OnceCell::new();
        let rule = if left { Rule::SupL } else { Rule::SupR };
        let targets = if left { &c2.antecedent } else { &c2.succedent };
        let mut out = Vec::new();
        for (i, e) in c1.succedent.iter().enumerate() {
            for fi in orientations(e) {
                let (l, _) = oriented(e, fi);
                for (j, f) in targets.iter().enumerate() {
                    for fj in orientations(f) {
                        let (s, _) = oriented(f, fj);
                        for pos in s.nonvar_positions() {
                            let sub = s.at(&pos).expect("position");
                            if !self.same_sort(l, sub) {
                                continue;
                            }
                            let mut b = Bindings::default();
                            if !b.unify(l, sub)
                                || !a1.terms.iter().zip(&a2.terms).all(|(x, y)| b.unify(x, y))
                            {
                                continue;
                            }
                            let tl = if left {
                                LitRef::Ante(j)
                            } else {
                                LitRef::Succ(j)
                            };
                            let sel = Selection {
                                lit: Some((LitRef::Succ(i), fi)),
                                target: Some((tl, fj)),
                                slot: None,
                                position: Some(pos),
                            };
                            let vars = vars.get_or_init(|| all_vars(&[(a1, c1), (&a2, &c2)]));
                            out.extend(self.record(
                                rule,
                                p1,
                                Some(p2),
                                sel,
                                b.to_substitution(vars.iter().copied()),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn superposition_right(&self, p1: Premise<'_>, p2: Premise<'_>) -> Vec<InferenceRecord> {
        self.superposition(p1, p2, false)
    }

    pub fn superposition_left(&self, p1: Premise<'_>, p2: Premise<'_>) -> Vec<InferenceRecord> {
        self.superposition(p1, p2, true)
    }

    /// Rewrites with `l ≈ r` (`l` unified) or `r ≈ l` (`r` unified) inside
    /// the second premise's constraint.
    fn constraint_inference(
        &self,
        rule: Rule,
        p1: Premise<'_>,
        p2: Premise<'_>,
    ) -> Vec<InferenceRecord> {
        let (a1, c1) = (p1.clause.constraint(), p1.clause.clause());
        if c1.succedent.is_empty() {
            return Vec::new();
        }
        let (a2, c2) = p2.clause.shifted_parts(Self::offset(p1.clause));
        let vars = OnceCell::new();
        let mut out = Vec::new();
        for (i, e) in c1.succedent.iter().enumerate() {
            if e.is_predicative(self.sig) {
                continue;
            }
            for fi in orientations(e) {
                let (l, r) = oriented(e, fi);
                let unified = if rule == Rule::ConSup { l } else { r };
                for (k, target) in a2.terms.iter().enumerate() {
                    for pos in target.nonvar_positions() {
                        let sub = target.at(&pos).expect("position");
                        if !self.same_sort(unified, sub) {
                            continue;
                        }
                        let mut b = Bindings::default();
                        if !b.unify(unified, sub) {
                            continue;
                        }
                        if rule == Rule::EqElim {
                            let a2l = target.replace_at(&pos, l).expect("position");
                            let ok =
                                a1.terms
                                    .iter()
                                    .zip(&a2.terms)
                                    .enumerate()
                                    .all(|(m, (x, y))| {
                                        if m == k {
                                            b.unify(x, &a2l)
                                        } else {
                                            b.unify(x, y)
                                        }
                                    });
                            if !ok {
                                continue;
                            }
                        }
                        let sel = Selection {
                            lit: Some((LitRef::Succ(i), fi)),
                            target: None,
                            slot: Some(k),
                            position: Some(pos),
                        };
                        let vars = vars.get_or_init(|| all_vars(&[(a1, c1), (&a2, &c2)]));
                        out.extend(self.record(
                            rule,
                            p1,
                            Some(p2),
                            sel,
                            b.to_substitution(vars.iter().copied()),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn constraint_superposition(
        &self,
        p1: Premise<'_>,
        p2: Premise<'_>,
    ) -> Vec<InferenceRecord> {
        self.constraint_inference(Rule::ConSup, p1, p2)
    }

    pub fn equality_elimination(&self, p1: Premise<'_>, p2: Premise<'_>) -> Vec<InferenceRecord> {
        if self.variant != CalculusVariant::Sfd || !p2.clause.is_empty_clause() {
            return Vec::new();
        }
        self.constraint_inference(Rule::EqElim, p1, p2)
    }

    pub fn general_equality_elimination(
        &self,
        p1: Premise<'_>,
        p2: Premise<'_>,
    ) -> Vec<InferenceRecord> {
        if self.variant != CalculusVariant::SfdGeneral {
            return Vec::new();
        }
        self.constraint_inference(Rule::GenEqElim, p1, p2)
    }

    pub fn unary_inferences(&self, p: Premise<'_>) -> Vec<InferenceRecord> {
        let mut out = self.equality_resolution(p);
        out.extend(self.equality_factoring(p));
        out
    }

    /// All binary inferences with `p1` as the equation premise.
    pub fn binary_inferences(&self, p1: Premise<'_>, p2: Premise<'_>) -> Vec<InferenceRecord> {
        let mut out = self.superposition_right(p1, p2);
        out.extend(self.superposition_left(p1, p2));
        out.extend(self.constraint_superposition(p1, p2));
        out.extend(self.equality_elimination(p1, p2));
        out.extend(self.general_equality_elimination(p1, p2));
        out
    }
}
