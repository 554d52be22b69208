//! Given-clause saturation with redundancy elimination and coverage-based
//! verdicts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::calculus::{Calculus, CalculusVariant, ClauseId, InferenceRecord, Premise, Rule};
use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::coverage::{self, CoverageError, SolvedForm};
use crate::induction::{self, InductionDirective, InductionError, Justification};
use crate::model::ModelHandle;
use crate::ordering::{Comparison, OrderingSpec};
use crate::term::{match_ref, Signature, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InductionPolicy {
    Off,
    Heuristic,
    Manual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Limit {
    Iterations,
    Clauses,
    Time,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::Iterations => "iteration limit",
            Limit::Clauses => "clause limit",
            Limit::Time => "time limit",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SaturationConfig {
    pub variant: CalculusVariant,
    pub induction: InductionPolicy,
    pub max_iterations: usize,
    pub max_clauses: usize,
    pub timeout: Option<Duration>,
    /// Every `age_ratio`-th given clause is the oldest one, the others the
    /// lightest.
    pub age_ratio: usize,
    /// Subsumption and demodulation; exact duplicates are always dropped.
    pub deletion: bool,
    pub alpha_tiebreak: Option<Vec<usize>>,
    pub assume_free: bool,
    /// Weight bound for the class ordering oracle.
    pub class_bound: u64,
}

impl Default for SaturationConfig {
    fn default() -> Self {
        SaturationConfig {
            variant: CalculusVariant::Sfd,
            induction: InductionPolicy::Off,
            max_iterations: 1000,
            max_clauses: 20000,
            timeout: None,
            age_ratio: 5,
            deletion: true,
            alpha_tiebreak: None,
            assume_free: false,
            class_bound: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub id: ClauseId,
    pub clause: ConstrainedClause,
    pub rule: Rule,
    pub parents: Vec<ClauseId>,
    /// Unit equations used to simplify the conclusion.
    pub simplified_by: Vec<ClauseId>,
    /// `(ρ₁, ρ₂)` of an induction step, one term per existential variable.
    pub induction: Option<(Vec<Term>, Vec<Term>)>,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Theorem,
    NonTheorem {
        alpha: Option<Constraint>,
        complement: SolvedForm,
    },
    GaveUp {
        limit: Limit,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Passive,
    Active,
    Deleted,
}

pub struct Saturation {
    sig: Signature,
    ord: OrderingSpec,
    config: SaturationConfig,
    entries: Vec<TraceEntry>,
    status: Vec<Status>,
    passive: BTreeSet<(usize, ClauseId)>,
    active: Vec<ClauseId>,
    empty: Vec<ClauseId>,
    query: Vec<ClauseId>,
    oracle: ModelHandle,
    fired: BTreeSet<ConstrainedClause>,
    picks: usize,
    iterations: usize,
    started: Instant,
    covered: bool,
    /// Uncovered part of the constraint space; `None` once coverage became undecidable.
    complement: Option<coverage::Complement>,
    /// Largest age gap between the oldest passive clause and the newest id
    /// observed at a pick.
    pub max_passive_age: usize,
}

/// Whether some `σ` gives `α₁σ = α₂` and `C₁σ ⊆ C₂`.
pub fn subsumes(c1: &ConstrainedClause, c2: &ConstrainedClause) -> bool {
    if c1.clause().antecedent.len() > c2.clause().antecedent.len()
        || c1.clause().succedent.len() > c2.clause().succedent.len()
    {
        return false;
    }
    let mut sub = BTreeMap::new();
    if !c1
        .constraint()
        .terms
        .iter()
        .zip(&c2.constraint().terms)
        .all(|(p, t)| match_ref(p, t, &mut sub))
    {
        return false;
    }
    let lits1: Vec<(bool, &Equation)> = c1
        .clause()
        .antecedent
        .iter()
        .map(|e| (false, e))
        .chain(c1.clause().succedent.iter().map(|e| (true, e)))
        .collect();
    let lits2: Vec<(bool, &Equation)> = c2
        .clause()
        .antecedent
        .iter()
        .map(|e| (false, e))
        .chain(c2.clause().succedent.iter().map(|e| (true, e)))
        .collect();
    let mut used = vec![false; lits2.len()];
    fn go(
        i: usize,
        l1: &[(bool, &Equation)],
        l2: &[(bool, &Equation)],
        used: &mut [bool],
        sub: &BTreeMap<Var, &Term>,
    ) -> bool {
        if i == l1.len() {
            return true;
        }
        let (pol, e) = l1[i];
        let (a, b) = e.sides();
        for (j, (pol2, f)) in l2.iter().enumerate() {
            if used[j] || *pol2 != pol {
                continue;
            }
            let (c, d) = f.sides();
            for (x, y) in [(c, d), (d, c)] {
                let mut s = sub.clone();
                if match_ref(a, x, &mut s) && match_ref(b, y, &mut s) {
                    used[j] = true;
                    if go(i + 1, l1, l2, used, &s) {
                        return true;
                    }
                    used[j] = false;
                }
            }
        }
        false
    }
    go(0, &lits1, &lits2, &mut used, &sub)
}

/// Renames variables of `(ρ₁, ρ₂)` in order of appearance to `z, w, …`.
fn rho_display_names(sig: &Signature, rho: &[Term]) -> Vec<String> {
    let mut numbering: BTreeMap<Var, Term> = BTreeMap::new();
    let mut out = Vec::new();
    for t in rho {
        let r = t.map_vars(&mut |v| {
            let n = numbering.len() as u32 + 2;
            numbering
                .entry(v)
                .or_insert_with(|| Term::Var(Var::universal(n, v.sort)))
                .clone()
        });
        out.push(sig.term(&r).to_string());
    }
    out
}

impl Saturation {
    pub fn new(
        sig: &Signature,
        ord: &OrderingSpec,
        axioms: &[ConstrainedClause],
        query: &[ConstrainedClause],
        config: SaturationConfig,
    ) -> Result<Saturation, crate::model::ModelError> {
        let mut sig = sig.clone();
        for f in crate::coverage::defined_symbols(&sig, ord, axioms).unwrap_or_default() {
            sig.mark_defined(f);
        }
        let sig = &sig;
        let plain: Vec<Clause> = axioms
            .iter()
            .filter(|c| c.is_unconstrained())
            .map(|c| c.clause().clone())
            .collect();
        let mut oracle = ModelHandle::from_clauses(sig, ord, &plain, config.class_bound)?
            .assume_free_constructors(config.assume_free);
        oracle.extend_nonfree(axioms.iter().map(ConstrainedClause::clause));
        let mut s = Saturation {
            sig: sig.clone(),
            ord: ord.clone(),
            config,
            entries: Vec::new(),
            status: Vec::new(),
            passive: BTreeSet::new(),
            active: Vec::new(),
            empty: Vec::new(),
            query: Vec::new(),
            oracle,
            fired: BTreeSet::new(),
            picks: 0,
            iterations: 0,
            started: Instant::now(),
            covered: false,
            complement: Some(coverage::Complement::new(sig)),
            max_passive_age: 0,
        };
        for c in axioms {
            s.push_input(c.clone());
        }
        for c in query {
            if let Some(id) = s.push_input(c.clone()) {
                s.query.push(id);
            }
        }
        Ok(s)
    }

    fn push_input(&mut self, c: ConstrainedClause) -> Option<ClauseId> {
        if c.is_tautology() || self.retained().any(|e| e.clause == c) {
            return None;
        }
        Some(self.add(TraceEntry {
            id: 0,
            clause: c,
            rule: Rule::Input,
            parents: Vec::new(),
            simplified_by: Vec::new(),
            induction: None,
        }))
    }

    fn add(&mut self, mut e: TraceEntry) -> ClauseId {
        let id = self.entries.len() + 1;
        e.id = id;
        let empty = e.clause.is_empty_clause();
        let w = e.clause.weight();
        self.entries.push(e);
        self.status.push(Status::Passive);
        if empty {
            self.activate_empty(id);
        } else {
            self.passive.insert((w, id));
        }
        id
    }

    fn activate_empty(&mut self, id: ClauseId) {
        self.status[id - 1] = Status::Active;
        if self.config.deletion {
            let cc = self.entries[id - 1].clause.clone();
            for other in self.empty.clone() {
                if subsumes(&cc, &self.entries[other - 1].clause) {
                    self.delete(other);
                }
            }
        }
        self.empty.push(id);
        self.active.push(id);
        let constraint = self.entries[id - 1].clause.constraint().clone();
        self.covered = match self.complement.as_mut().map(|c| {
            c.subtract(&self.sig, &self.ord, &constraint)
                .map(|()| c.is_empty())
        }) {
            Some(Ok(b)) => b,
            Some(Err(CoverageError::Ground(_) | CoverageError::Inconclusive(_))) => {
                // Undecided coverage stays undecided for the rest of the run.
                self.complement = None;
                false
            }
            None => false,
        };
    }

    fn delete(&mut self, id: ClauseId) {
        match self.status[id - 1] {
            Status::Passive => {
                let w = self.entries[id - 1].clause.weight();
                self.passive.remove(&(w, id));
            }
            Status::Active => {
                self.active.retain(|x| *x != id);
                self.empty.retain(|x| *x != id);
            }
            Status::Deleted => {}
        }
        self.status[id - 1] = Status::Deleted;
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn ordering(&self) -> &OrderingSpec {
        &self.ord
    }

    pub fn trace(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn status(&self, id: ClauseId) -> Status {
        self.status[id - 1]
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn query_ids(&self) -> &[ClauseId] {
        &self.query
    }

    fn retained(&self) -> impl Iterator<Item = &TraceEntry> {
        self.entries
            .iter()
            .filter(|e| self.status[e.id - 1] != Status::Deleted)
    }

    /// Clauses not deleted, passive or active.
    pub fn retained_clauses(&self) -> Vec<ConstrainedClause> {
        self.retained().map(|e| e.clause.clone()).collect()
    }

    pub fn active_clauses(&self) -> Vec<ConstrainedClause> {
        self.active
            .iter()
            .map(|id| self.entries[id - 1].clause.clone())
            .collect()
    }

    /// `A_N` in derivation order.
    pub fn empty_constraints(&self) -> Vec<Constraint> {
        self.empty
            .iter()
            .map(|id| self.entries[id - 1].clause.constraint().clone())
            .collect()
    }

    pub fn empty_clause_ids(&self) -> &[ClauseId] {
        &self.empty
    }

    pub fn is_covering(&self) -> bool {
        self.covered
    }

    /// Adds the conclusions of an explicitly given induction directive.
    pub fn apply_directive(
        &mut self,
        d: &InductionDirective,
    ) -> Result<Vec<ClauseId>, InductionError> {
        let recs = induction::induction_conclusions(&self.sig, d, &self.oracle)?;
        let parents = self.query.clone();
        Ok(self.add_induction(recs, parents, d))
    }

    fn add_induction(
        &mut self,
        recs: Vec<InferenceRecord>,
        parents: Vec<ClauseId>,
        d: &InductionDirective,
    ) -> Vec<ClauseId> {
        let mut ids = Vec::new();
        for r in recs {
            let entry = TraceEntry {
                id: 0,
                clause: r.conclusion,
                rule: Rule::Ind,
                parents: parents.clone(),
                simplified_by: Vec::new(),
                induction: Some((d.rho1.clone(), d.rho2.clone())),
            };
            if let Some(id) = self.admit(entry) {
                ids.push(id);
            }
        }
        ids
    }

    fn query_clauses(&self) -> Vec<ConstrainedClause> {
        self.query
            .iter()
            .map(|id| self.entries[id - 1].clause.clone())
            .collect()
    }

    fn unit_rewriters(&self) -> Vec<ClauseId> {
        self.active
            .iter()
            .copied()
            .filter(|id| {
                let c = &self.entries[id - 1].clause;
                c.is_unconstrained()
                    && c.clause().antecedent.is_empty()
                    && c.clause().succedent.len() == 1
                    && !c.clause().succedent[0].is_predicative(&self.sig)
            })
            .collect()
    }

    fn rewrite_term(
        &self,
        cc: &ConstrainedClause,
        units: &[ClauseId],
        t: &Term,
        guard: Option<&Term>,
        used: &mut Vec<ClauseId>,
    ) -> Term {
        let mut t = t.clone();
        'outer: loop {
            for p in t.nonvar_positions() {
                let sub = t.at(&p).expect("position").clone();
                for id in units {
                    let unit = &self.entries[id - 1].clause;
                    if unit == cc {
                        continue;
                    }
                    let (a, b) = unit.clause().succedent[0].sides();
                    for (l, r) in [(a, b), (b, a)] {
                        let Some(s) = crate::term::matches(l, &sub) else {
                            continue;
                        };
                        let rs = s.apply(r);
                        if !rs.vars().is_subset(&sub.vars()) || !self.ord.greater(&sub, &rs) {
                            continue;
                        }
                        if p.is_root() && guard.is_some_and(|other| !self.ord.greater(other, &rs)) {
                            continue;
                        }
                        t = t.replace_at(&p, &rs).expect("position");
                        if !used.contains(id) {
                            used.push(*id);
                        }
                        continue 'outer;
                    }
                }
            }
            return t;
        }
    }

    /// Rewrites with oriented unconstrained unit equations; returns the
    /// result and the units used. The larger side of a positive equation is
    /// rewritten at the root only by instances smaller than the other side.
    pub fn demodulate(&self, cc: &ConstrainedClause) -> (ConstrainedClause, Vec<ClauseId>) {
        let units = self.unit_rewriters();
        let mut used = Vec::new();
        if units.is_empty() {
            return (cc.clone(), used);
        }
        let clause = cc.clause();
        let mut rw =
            |t: &Term, guard: Option<&Term>| self.rewrite_term(cc, &units, t, guard, &mut used);
        let ante: Vec<Equation> = clause
            .antecedent
            .iter()
            .map(|e| {
                let (a, b) = e.sides();
                Equation::new(rw(a, None), rw(b, None))
            })
            .collect();
        let succ: Vec<Equation> = clause
            .succedent
            .iter()
            .map(|e| {
                let (a, b) = e.sides();
                let (na, nb) = match self.ord.compare(a, b) {
                    Comparison::Greater => (rw(a, Some(b)), rw(b, None)),
                    Comparison::Less => (rw(a, None), rw(b, Some(a))),
                    _ => (rw(a, Some(b)), rw(b, Some(a))),
                };
                Equation::new(na, nb)
            })
            .collect();
        let constraint = if self.config.variant == CalculusVariant::Sfd {
            Constraint::new(cc.constraint().terms.iter().map(|t| rw(t, None)).collect())
        } else {
            cc.constraint().clone()
        };
        if used.is_empty() {
            return (cc.clone(), used);
        }
        (
            ConstrainedClause::canonical(constraint, Clause::new(ante, succ)),
            used,
        )
    }

    fn redundant(&self, cc: &ConstrainedClause, older_than: Option<ClauseId>) -> bool {
        if cc.is_tautology() {
            return true;
        }
        self.retained().any(|e| {
            if Some(e.id) == older_than {
                return false;
            }
            if e.clause == *cc {
                return true;
            }
            self.config.deletion
                && self.status[e.id - 1] == Status::Active
                && subsumes(&e.clause, cc)
        })
    }

    /// Simplifies and stores a conclusion unless it is redundant.
    fn admit(&mut self, mut entry: TraceEntry) -> Option<ClauseId> {
        if self.config.deletion {
            let (c, used) = self.demodulate(&entry.clause);
            entry.clause = c;
            entry.simplified_by = used;
        }
        if self.redundant(&entry.clause, None) {
            return None;
        }
        Some(self.add(entry))
    }

    fn pick(&mut self) -> Option<ClauseId> {
        self.picks += 1;
        let oldest = self.passive.iter().map(|(_, id)| *id).min()?;
        self.max_passive_age = self.max_passive_age.max(self.entries.len() - oldest);
        let id = if self.config.age_ratio > 0 && self.picks.is_multiple_of(self.config.age_ratio) {
            oldest
        } else {
            self.passive.iter().next().map(|(_, id)| *id)?
        };
        let w = self.entries[id - 1].clause.weight();
        self.passive.remove(&(w, id));
        Some(id)
    }

    /// One given-clause iteration. Returns false when the passive set is
    /// empty.
    pub fn step(&mut self) -> bool {
        let Some(id) = self.pick() else { return false };
        if self.config.deletion {
            let (c, used) = self.demodulate(&self.entries[id - 1].clause);
            if !used.is_empty() {
                self.entries[id - 1].clause = c;
                self.entries[id - 1].simplified_by.extend(used);
            }
        }
        let given = self.entries[id - 1].clause.clone();
        if self.redundant(&given, Some(id)) {
            self.status[id - 1] = Status::Deleted;
            return true;
        }
        if given.is_empty_clause() {
            self.activate_empty(id);
            return true;
        }
        self.iterations += 1;
        if self.config.deletion {
            for other in self.active.clone() {
                if subsumes(&given, &self.entries[other - 1].clause) {
                    self.delete(other);
                }
            }
        }
        self.status[id - 1] = Status::Active;
        self.active.push(id);
        self.oracle.extend_nonfree(std::iter::once(given.clause()));
        if self.config.induction == InductionPolicy::Heuristic {
            self.try_induction(id);
        }
        let records = self.inferences(id);
        for r in records {
            let entry = TraceEntry {
                id: 0,
                clause: r.conclusion,
                rule: r.rule,
                parents: r.premises,
                simplified_by: Vec::new(),
                induction: None,
            };
            self.admit(entry);
            if self.covered {
                return true;
            }
        }
        true
    }

    fn inferences(&self, id: ClauseId) -> Vec<InferenceRecord> {
        let calc = Calculus::new(&self.sig, &self.ord, self.config.variant);
        let given = &self.entries[id - 1].clause;
        let mut out = calc.unary_inferences(Premise::new(id, given));
        for other in &self.active {
            let oc = &self.entries[other - 1].clause;
            out.extend(calc.binary_inferences(Premise::new(id, given), Premise::new(*other, oc)));
            if *other != id {
                out.extend(
                    calc.binary_inferences(Premise::new(*other, oc), Premise::new(id, given)),
                );
            }
        }
        out
    }

    fn try_induction(&mut self, id: ClauseId) {
        if self.query.contains(&id) || self.entries[id - 1].rule == Rule::Ind {
            return;
        }
        let h = self.query_clauses();
        if !induction::is_valid_query(&h) {
            return;
        }
        let derived = self.entries[id - 1].clause.clone();
        let calc = Calculus::new(&self.sig, &self.ord, self.config.variant);
        for (rho1, rho2) in induction::heuristic_candidates(&derived, &self.oracle) {
            let key = ConstrainedClause::canonical(
                Constraint::new([rho2.clone(), rho1.clone()].concat()),
                Clause::empty(),
            );
            if self.fired.contains(&key) {
                continue;
            }
            let d = InductionDirective {
                query: h.clone(),
                premises: h.clone(),
                rho1,
                rho2,
                justification: Justification::Heuristic,
            };
            let Ok(recs) = induction::induction_conclusions(&self.sig, &d, &self.oracle) else {
                continue;
            };
            let useful = recs.iter().any(|r| {
                let (a, b) = (Premise::new(0, &r.conclusion), Premise::new(id, &derived));
                [
                    calc.superposition_left(a, b),
                    calc.superposition_right(a, b),
                    calc.superposition_left(b, a),
                    calc.superposition_right(b, a),
                ]
                .iter()
                .any(|v| !v.is_empty())
            });
            if useful {
                self.fired.insert(key);
                let parents = self.query.clone();
                self.add_induction(recs, parents, &d);
                return;
            }
        }
    }

    fn limit_hit(&self) -> Option<Limit> {
        if self.iterations >= self.config.max_iterations {
            return Some(Limit::Iterations);
        }
        if self.entries.len() >= self.config.max_clauses {
            return Some(Limit::Clauses);
        }
        if let Some(t) = self.config.timeout {
            if self.started.elapsed() >= t {
                return Some(Limit::Time);
            }
        }
        None
    }

    /// Runs until coverage, saturation or a resource limit.
    pub fn saturate(&mut self) -> Verdict {
        self.started = Instant::now();
        loop {
            if self.covered {
                return Verdict::Theorem;
            }
            if let Some(limit) = self.limit_hit() {
                return Verdict::GaveUp { limit };
            }
            if !self.step() {
                break;
            }
        }
        if self.covered {
            return Verdict::Theorem;
        }
        let patterns = self.empty_constraints();
        let alpha = coverage::minimal_uncovered(
            &self.sig,
            &self.ord,
            &patterns,
            self.config.alpha_tiebreak.as_deref(),
        )
        .ok()
        .flatten();
        let complement =
            coverage::quantifier_elimination(&self.sig, &self.ord, &patterns).unwrap_or_default();
        Verdict::NonTheorem { alpha, complement }
    }

    /// Names for the variables bound to the existential variables in
    /// induction steps.
    pub fn render_entry(&self, e: &TraceEntry, alpha_names: &[String]) -> String {
        let mut s = format!(
            "{}: {} ; {}",
            e.id,
            e.clause.display_constraint_first(&self.sig),
            e.rule
        );
        let parents: Vec<String> = e.parents.iter().map(ToString::to_string).collect();
        match &e.induction {
            Some((r1, r2)) => {
                let names = rho_display_names(&self.sig, &[r1.clone(), r2.clone()].concat());
                let (n1, n2) = names.split_at(r1.len());
                let show = |vals: &[String]| -> String {
                    vals.iter()
                        .enumerate()
                        .map(|(i, v)| {
                            format!("{}↦{}", alpha_names.get(i).map_or("?", String::as_str), v)
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                s.push_str(&format!(
                    "({}; {}; {})",
                    parents.join(","),
                    show(n1),
                    show(n2)
                ));
            }
            None if e.rule != Rule::Input => s.push_str(&format!("({})", parents.join(","))),
            None => {}
        }
        if !e.simplified_by.is_empty() {
            let ids: Vec<String> = e.simplified_by.iter().map(ToString::to_string).collect();
            s.push_str(&format!(" demod({})", ids.join(",")));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::clausify::{clausify, ClausifyMode};
    use crate::frontend::Problem;

    fn run(text: &str, config: SaturationConfig) -> (Saturation, Verdict) {
        let p = Problem::parse(text).unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        let ord = p.ordering_for(&c.sig).unwrap();
        let mut s = Saturation::new(&c.sig, &ord, &c.axioms, &c.query, config).unwrap();
        let v = s.saturate();
        (s, v)
    }

    fn names(s: &Saturation) -> Vec<String> {
        let n = vec!["x".to_string(); s.signature().existentials().len()];
        s.trace().iter().map(|e| s.render_entry(e, &n)).collect()
    }

    const NG: &str = "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred G : nat, nat\naxiom -> G(s(0), 0)\naxiom G(x, y) -> G(s(x), s(y))\nconjecture forall x. G(s(x), x)";

    #[test]
    fn divergence_without_induction() {
        let (s, v) = run(
            NG,
            SaturationConfig {
                max_iterations: 6,
                ..Default::default()
            },
        );
        assert!(matches!(
            v,
            Verdict::GaveUp {
                limit: Limit::Iterations
            }
        ));
        let shown: Vec<String> = s
            .empty_constraints()
            .iter()
            .map(|c| c.display(s.signature()).to_string())
            .collect();
        assert_eq!(shown[..4], ["u≈0", "u≈s(0)", "u≈s(s(0))", "u≈s(s(s(0)))"]);
    }

    #[test]
    fn induction_closes_the_gap() {
        let (s, v) = run(
            NG,
            SaturationConfig {
                induction: InductionPolicy::Heuristic,
                ..Default::default()
            },
        );
        assert!(matches!(v, Verdict::Theorem), "{:#?}", names(&s));
        let t = names(&s);
        assert!(
            t.iter()
                .any(|l| l.contains("u≈s(x) ∥ → G(s(x),x) ; Ind(3; x↦z; x↦s(z))")),
            "{t:#?}"
        );
    }

    #[test]
    fn subsumption_examples() {
        let p = Problem::parse("sort e\nsort p\nfunc a : e\nfunc b : e\nfunc pc : p\nfunc qc : p\npred G : e, p\nexistential u : p\nexistential v : e\naxiom G(a, x) -> || u = x, v = a\naxiom G(a, pc), G(b, qc) -> || u = pc, v = a\naxiom G(a, pc) -> || u = qc, v = a").unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        assert!(subsumes(&c.axioms[0], &c.axioms[1]));
        assert!(!subsumes(&c.axioms[1], &c.axioms[0]));
        assert!(!subsumes(&c.axioms[0], &c.axioms[2]));
    }

    #[test]
    fn first_order_refutation_in_one_step() {
        let (s, v) = run(
            "sort t\nfunc a : t\npred P : t\naxiom -> P(a)\naxiom P(x) ->",
            SaturationConfig::default(),
        );
        assert!(matches!(v, Verdict::Theorem));
        assert_eq!(s.trace().len(), 3);
        assert_eq!(
            s.trace().iter().filter(|e| e.rule != Rule::Input).count(),
            1
        );
    }

    #[test]
    fn demodulation_rewrites_clause_part() {
        let p = Problem::parse("sort t\nfunc a : t\nfunc f : t -> t\npred P : t\nexistential u : t\naxiom -> f(a) = a\naxiom -> P(f(a)) || u = x").unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        let ord = p.ordering_for(&c.sig).unwrap();
        let mut s =
            Saturation::new(&c.sig, &ord, &c.axioms, &[], SaturationConfig::default()).unwrap();
        s.step();
        let (d, used) = s.demodulate(&c.axioms[1]);
        assert_eq!(used, vec![1]);
        assert_eq!(d.display(&c.sig).to_string(), "→ P(a)");
    }
}
