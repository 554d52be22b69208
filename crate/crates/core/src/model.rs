//! Bounded construction of the minimal model of a constrained clause set.
//!
//! Ground instances whose constraint equals the chosen witness `α_N` are
//! visited in increasing clause order; an instance produces the rule `s → t`
//! when `s ≈ t` is strictly maximal with `s ≻ t`, `s` is irreducible, the
//! antecedent holds and no succedent equation holds so far. Instances are
//! built from terms up to a weight bound, so answers about larger terms are
//! marked inexact.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::ground::{GroundError, GroundTable};
use crate::ordering::{occurrences, Comparison, LitRef, OrderingSpec};
use crate::term::{
    match_into, Position, Signature, SortId, Substitution, Sym, Term, Var, PRED_SORT, TRUE_SYM,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error("the witness constraint must be ground")]
    NonGroundWitness,
    #[error("rule {0} is not decreasing")]
    NotDecreasing(String),
}

/// Three-valued answer of the class ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tri {
    True,
    False,
    Unknown,
}

/// A ground answer; `exact` is false when the query leaves the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Answer {
    pub value: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteRule {
    pub lhs: Term,
    pub rhs: Term,
    /// The ground clause instance that produced the rule.
    pub producer: Option<Clause>,
}

#[derive(Clone, Debug)]
pub struct ModelHandle {
    sig: Signature,
    ord: OrderingSpec,
    bound: u64,
    rules: BTreeMap<Term, RewriteRule>,
    alpha: Constraint,
    nonfree: BTreeSet<Sym>,
    assume_free: bool,
}

/// Symbols that may head the larger side of a positive equation.
fn nonfree_symbols(sig: &Signature, ord: &OrderingSpec, clauses: &[&Clause]) -> BTreeSet<Sym> {
    let mut out = BTreeSet::new();
    for c in clauses {
        for e in &c.succedent {
            let (a, b) = e.sides();
            for (x, y) in [(a, b), (b, a)] {
                if ord.compare(x, y) == Comparison::Less {
                    continue;
                }
                match x {
                    Term::App(f, _) => {
                        out.insert(*f);
                    }
                    Term::Var(v) => out.extend(sig.constructors(v.sort)),
                }
            }
        }
    }
    out
}

/// Sorts ground clauses increasingly. Terms are ranked once, after which a
/// multiset comparison is a lexicographic one on descending rank lists.
fn sort_ground_clauses(ord: &OrderingSpec, clauses: &mut [Clause]) {
    fn descending<T: Ord>(mut v: Vec<T>) -> Vec<T> {
        v.sort_by(|a, b| b.cmp(a));
        v
    }
    let mut terms: Vec<&Term> = clauses
        .iter()
        .flat_map(|c| c.antecedent.iter().chain(&c.succedent))
        .flat_map(|e| {
            let (s, t) = e.sides();
            [s, t]
        })
        .collect();
    terms.sort_by(|a, b| ord.ground_cmp(a, b));
    terms.dedup();
    let rank: HashMap<&Term, usize> = terms.into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let key = |c: &Clause| {
        descending(
            occurrences(c)
                .iter()
                .map(|o| {
                    descending(
                        o.as_multiset()
                            .iter()
                            .map(|ts| descending(ts.iter().map(|t| rank[*t]).collect()))
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    let mut keyed: Vec<(Vec<Vec<Vec<usize>>>, Clause)> =
        clauses.iter().map(|c| (key(c), c.clone())).collect();
    keyed.sort();
    for (slot, (_, c)) in clauses.iter_mut().zip(keyed) {
        *slot = c;
    }
}

impl ModelHandle {
    /// Builds `R_N` from the instances of `n` whose constraint becomes
    /// `alpha`, with universal variables ranging over terms of weight at
    /// most `bound`.
    pub fn construct(
        sig: &Signature,
        ord: &OrderingSpec,
        n: &[ConstrainedClause],
        alpha: &Constraint,
        bound: u64,
    ) -> Result<ModelHandle, ModelError> {
        if !alpha.is_ground() {
            return Err(ModelError::NonGroundWitness);
        }
        let table = GroundTable::new(sig, ord, bound)?;
        let mut pools: BTreeMap<SortId, Vec<Term>> = BTreeMap::new();
        let mut instances = BTreeSet::new();
        for cc in n {
            let mut fixed = BTreeMap::new();
            if !cc
                .constraint()
                .terms
                .iter()
                .zip(&alpha.terms)
                .all(|(p, g)| match_into(p, g, &mut fixed))
            {
                continue;
            }
            let base = Substitution::from_pairs(fixed);
            let clause = cc.clause().apply(&base);
            let vars: Vec<Var> = clause.vars().into_iter().collect();
            for v in &vars {
                pools
                    .entry(v.sort)
                    .or_insert_with(|| table.up_to(v.sort, bound));
            }
            crate::clause::for_each_assignment(&vars, &pools, &mut |s| {
                instances.insert(clause.apply(s));
            });
        }
        let mut instances: Vec<Clause> = instances.into_iter().collect();
        sort_ground_clauses(ord, &mut instances);
        let parts: Vec<&Clause> = n.iter().map(ConstrainedClause::clause).collect();
        let mut m = ModelHandle {
            sig: sig.clone(),
            ord: ord.clone(),
            bound,
            rules: BTreeMap::new(),
            alpha: alpha.clone(),
            nonfree: nonfree_symbols(sig, ord, &parts),
            assume_free: false,
        };
        for c in instances {
            if let Some((l, r)) = m.production(&c) {
                m.rules.insert(
                    l.clone(),
                    RewriteRule {
                        lhs: l,
                        rhs: r,
                        producer: Some(c),
                    },
                );
            }
        }
        Ok(m)
    }

    /// Builds `R_N` for unconstrained clauses.
    pub fn from_clauses(
        sig: &Signature,
        ord: &OrderingSpec,
        clauses: &[Clause],
        bound: u64,
    ) -> Result<ModelHandle, ModelError> {
        let n: Vec<ConstrainedClause> = clauses
            .iter()
            .map(|c| ConstrainedClause::unconstrained(sig, c.clone()))
            .collect();
        let mut m = Self::construct(sig, ord, &n, &Constraint::new(vec![]), bound)?;
        m.alpha = Constraint::new(vec![]);
        Ok(m)
    }

    /// A handle over explicitly given ground rules, each required to be
    /// decreasing.
    pub fn from_rules(
        sig: &Signature,
        ord: &OrderingSpec,
        rules: Vec<(Term, Term)>,
        bound: u64,
    ) -> Result<ModelHandle, ModelError> {
        let mut map = BTreeMap::new();
        for (l, r) in rules {
            if !ord.greater(&l, &r) {
                return Err(ModelError::NotDecreasing(format!(
                    "{} -> {}",
                    sig.term(&l),
                    sig.term(&r)
                )));
            }
            map.insert(
                l.clone(),
                RewriteRule {
                    lhs: l,
                    rhs: r,
                    producer: None,
                },
            );
        }
        let nonfree = map.keys().filter_map(Term::head).collect();
        Ok(ModelHandle {
            sig: sig.clone(),
            ord: ord.clone(),
            bound,
            rules: map,
            alpha: Constraint::new(vec![]),
            nonfree,
            assume_free: false,
        })
    }

    /// Treats every symbol as free in the class ordering certificate.
    pub fn assume_free_constructors(mut self, on: bool) -> ModelHandle {
        self.assume_free = on;
        self
    }

    fn production(&self, c: &Clause) -> Option<(Term, Term)> {
        for (i, e) in c.succedent.iter().enumerate() {
            let (a, b) = e.sides();
            let (s, t) = match self.ord.compare(a, b) {
                Comparison::Greater => (a, b),
                Comparison::Less => (b, a),
                _ => continue,
            };
            if !self.ord.is_strictly_maximal(c, LitRef::Succ(i)) {
                continue;
            }
            if self.reducible(s) {
                return None;
            }
            if !c.antecedent.iter().all(|g| self.equal(g)) {
                return None;
            }
            if c.succedent.iter().any(|d| self.equal(d)) {
                return None;
            }
            return Some((s.clone(), t.clone()));
        }
        None
    }

    fn equal(&self, e: &Equation) -> bool {
        let (a, b) = e.sides();
        self.normal_form(a) == self.normal_form(b)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn alpha(&self) -> &Constraint {
        &self.alpha
    }

    pub fn rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.values()
    }

    pub fn rule_for(&self, lhs: &Term) -> Option<&RewriteRule> {
        self.rules.get(lhs)
    }

    pub fn reducible(&self, t: &Term) -> bool {
        self.rules.contains_key(t) || t.args().iter().any(|a| self.reducible(a))
    }

    /// Innermost normal form.
    pub fn normal_form(&self, t: &Term) -> Term {
        let t = match t {
            Term::Var(_) => return t.clone(),
            Term::App(f, args) => Term::App(*f, args.iter().map(|a| self.normal_form(a)).collect()),
        };
        match self.rules.get(&t) {
            Some(r) => self.normal_form(&r.rhs),
            None => t,
        }
    }

    /// Positions of all redexes in `t`.
    pub fn redexes(&self, t: &Term) -> Vec<Position> {
        t.nonvar_positions()
            .into_iter()
            .filter(|p| t.at(p).is_some_and(|s| self.rules.contains_key(s)))
            .collect()
    }

    /// One rewrite step at a redex position.
    pub fn rewrite_at(&self, t: &Term, p: &Position) -> Option<Term> {
        let r = self.rules.get(t.at(p)?)?;
        t.replace_at(p, &r.rhs).ok()
    }

    /// Normal form by repeatedly rewriting the outermost-leftmost redex.
    pub fn normal_form_outermost(&self, t: &Term) -> Term {
        let mut t = t.clone();
        while let Some(p) = self.redexes(&t).into_iter().min_by_key(|p| p.0.len()) {
            t = self.rewrite_at(&t, &p).expect("redex");
        }
        t
    }

    fn within_bound(&self, t: &Term) -> bool {
        self.ord.weight(t) <= self.bound
    }

    pub fn holds(&self, e: &Equation) -> Answer {
        let (a, b) = e.sides();
        Answer {
            value: self.equal(e),
            exact: self.within_bound(a) && self.within_bound(b),
        }
    }

    /// Truth of a ground predicate atom.
    pub fn holds_atom(&self, atom: &Term) -> Answer {
        self.holds(&Equation::atom(atom.clone()))
    }

    /// No left side is reducible by another rule.
    pub fn is_left_reduced(&self) -> bool {
        self.rules
            .keys()
            .all(|l| l.args().iter().all(|a| !self.reducible(a)))
    }

    pub fn is_decreasing(&self) -> bool {
        self.rules
            .values()
            .all(|r| self.ord.greater(&r.lhs, &r.rhs))
    }

    /// Whether every clause holds for every grounding of weight at most
    /// `bound` under the ground `witness` for the existential variables.
    pub fn check_models(
        &self,
        s: &[ConstrainedClause],
        witness: &Constraint,
        bound: u64,
    ) -> Result<Answer, ModelError> {
        let table = GroundTable::new(&self.sig, &self.ord, bound)?;
        let mut pools: BTreeMap<SortId, Vec<Term>> = BTreeMap::new();
        let mut exact = true;
        let witness_nf: Vec<Term> = witness.terms.iter().map(|t| self.normal_form(t)).collect();
        for cc in s {
            let vars: Vec<Var> = cc.vars().into_iter().collect();
            for v in &vars {
                pools
                    .entry(v.sort)
                    .or_insert_with(|| table.up_to(v.sort, bound));
            }
            let mut ok = true;
            crate::clause::for_each_assignment(&vars, &pools, &mut |sub| {
                if !ok {
                    return;
                }
                let inst = cc.apply(sub);
                let applies = inst
                    .constraint()
                    .terms
                    .iter()
                    .zip(&witness_nf)
                    .all(|(t, w)| &self.normal_form(t) == w);
                if !applies {
                    return;
                }
                let c = inst.clause();
                let ante = c.antecedent.iter().all(|e| self.equal(e));
                let succ = c.succedent.iter().any(|e| self.equal(e));
                if ante && !succ {
                    ok = false;
                }
                for e in c.antecedent.iter().chain(&c.succedent) {
                    let (a, b) = e.sides();
                    exact &= self.within_bound(a) && self.within_bound(b);
                }
            });
            if !ok {
                return Ok(Answer {
                    value: false,
                    exact,
                });
            }
        }
        Ok(Answer { value: true, exact })
    }

    /// A witness of weight at most `bound` per entry under which the model
    /// satisfies `s`, if any.
    pub fn find_witness(
        &self,
        s: &[ConstrainedClause],
        bound: u64,
    ) -> Result<Option<Constraint>, ModelError> {
        let table = GroundTable::constructor_terms(&self.sig, &self.ord, bound)?;
        let vars: Vec<Var> = self
            .sig
            .existentials()
            .iter()
            .enumerate()
            .map(|(i, e)| Var::universal(i as u32, e.sort))
            .collect();
        let mut pools = BTreeMap::new();
        for v in &vars {
            pools
                .entry(v.sort)
                .or_insert_with(|| table.up_to(v.sort, bound));
        }
        let mut found = None;
        let mut err = None;
        crate::clause::for_each_assignment(&vars, &pools, &mut |sub| {
            if found.is_some() || err.is_some() {
                return;
            }
            let w = Constraint::new(vars.iter().map(|v| sub.apply(&Term::Var(*v))).collect());
            match self.check_models(s, &w, bound) {
                Ok(a) if a.value => found = Some(w),
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(found),
        }
    }

    /// Withdraws freeness from symbols heading a non-smaller side of a
    /// positive equation in `clauses`.
    pub fn extend_nonfree<'c>(&mut self, clauses: impl IntoIterator<Item = &'c Clause>) {
        let cs: Vec<&Clause> = clauses.into_iter().collect();
        let more = nonfree_symbols(&self.sig, &self.ord, &cs);
        self.nonfree.extend(more);
    }

    pub fn is_free(&self, f: Sym) -> bool {
        self.assume_free || !self.nonfree.contains(&f)
    }

    /// `[s] < [t]` for all groundings. Certified when `s` is a strict
    /// subterm of `t` below free symbols only; refuted when some sampled
    /// grounding makes both sides equal.
    pub fn class_less(&self, s: &Term, t: &Term) -> Tri {
        if self.free_path(s, t) {
            return Tri::True;
        }
        let mut vars: Vec<Var> = Vec::new();
        s.vars_in_order(&mut vars);
        t.vars_in_order(&mut vars);
        let Ok(table) = GroundTable::new(&self.sig, &self.ord, self.bound.min(4)) else {
            return Tri::Unknown;
        };
        let mut pools = BTreeMap::new();
        for v in &vars {
            pools
                .entry(v.sort)
                .or_insert_with(|| table.up_to(v.sort, table.bound()));
        }
        let mut equal = false;
        let mut budget = 500;
        crate::clause::for_each_assignment(&vars, &pools, &mut |sub| {
            if equal || budget == 0 {
                return;
            }
            budget -= 1;
            equal = self.normal_form(&sub.apply(s)) == self.normal_form(&sub.apply(t));
        });
        if equal {
            Tri::False
        } else {
            Tri::Unknown
        }
    }

    fn free_path(&self, s: &Term, t: &Term) -> bool {
        match t {
            Term::Var(_) => false,
            Term::App(f, args) => {
                self.is_free(*f) && args.iter().any(|a| a == s || self.free_path(s, a))
            }
        }
    }

    /// Rules, witness and true predicate atoms up to the bound.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut rules: Vec<&RewriteRule> = self.rules.values().collect();
        rules.sort_by(|a, b| self.ord.ground_cmp(&a.lhs, &b.lhs));
        let _ = writeln!(out, "alpha_N: {}", self.alpha.display(&self.sig));
        let _ = writeln!(out, "rules:");
        for r in rules {
            let _ = writeln!(
                out,
                "  {} -> {}",
                self.sig.term(&r.lhs),
                self.sig.term(&r.rhs)
            );
        }
        let _ = writeln!(out, "facts (argument weight <= {}):", self.bound);
        for atom in self.true_atoms(200) {
            let _ = writeln!(out, "  {}", self.sig.term(&atom));
        }
        out
    }

    /// True predicate atoms with arguments up to the bound, at most `limit`.
    pub fn true_atoms(&self, limit: usize) -> Vec<Term> {
        let Ok(table) = GroundTable::new(&self.sig, &self.ord, self.bound) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for p in self
            .sig
            .symbols()
            .filter(|f| self.sig.is_predicate(*f) && *f != TRUE_SYM)
        {
            let d = self.sig.decl(p);
            debug_assert_eq!(d.result, PRED_SORT);
            let vars: Vec<Var> = d
                .args
                .iter()
                .enumerate()
                .map(|(i, s)| Var::universal(i as u32, *s))
                .collect();
            let mut pools = BTreeMap::new();
            for v in &vars {
                pools.entry(v.sort).or_insert_with(|| {
                    let mut ts = table.up_to(v.sort, self.bound);
                    ts.sort_by(|a, b| self.ord.ground_cmp(a, b));
                    ts
                });
            }
            crate::clause::for_each_assignment(&vars, &pools, &mut |sub| {
                if out.len() >= limit {
                    return;
                }
                let atom = Term::app(p, vars.iter().map(|v| sub.apply(&Term::Var(*v))).collect());
                if self.holds_atom(&atom).value {
                    out.push(atom);
                }
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::clausify::{clausify, ClausifyMode};
    use crate::frontend::Problem;

    fn load(text: &str) -> (Signature, OrderingSpec, Vec<ConstrainedClause>) {
        let p = Problem::parse(text).unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        let ord = p.ordering_for(&c.sig).unwrap();
        (c.sig.clone(), ord, c.all_clauses())
    }

    fn term(sig: &Signature, s: &str) -> Term {
        let ast = crate::frontend::syntax::parse_term_ast(s).unwrap();
        fn build(sig: &Signature, a: &crate::frontend::syntax::TermAst) -> Term {
            Term::app(
                sig.lookup(&a.name).unwrap(),
                a.args.iter().map(|x| build(sig, x)).collect(),
            )
        }
        build(sig, &ast)
    }

    const NG: &str = "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred G : nat, nat\naxiom -> G(s(0), 0)\naxiom G(x, y) -> G(s(x), s(y))";

    #[test]
    fn ground_clause_sort_follows_the_clause_ordering() {
        let (sig, _, _) = load(NG);
        let names = ["0", "s(0)", "s(s(0))", "G(0,0)", "G(s(0),0)", "G(0,s(0))"];
        let ts: Vec<Term> = names.iter().map(|n| term(&sig, n)).collect();
        let eq = |i: usize, j: usize| Equation::new(ts[i].clone(), ts[j].clone());
        let mut clauses = Vec::new();
        for i in 0..ts.len() {
            for j in 0..ts.len() {
                let (a, b) = (i.min(2), j.min(2));
                clauses.push(Clause::new(vec![eq(a, b)], vec![]));
                clauses.push(Clause::new(vec![], vec![eq(a, b)]));
                if i >= 3 && j >= 3 {
                    clauses.push(Clause::new(
                        vec![Equation::atom(ts[i].clone())],
                        vec![Equation::atom(ts[j].clone())],
                    ));
                }
            }
        }
        for ord in [
            OrderingSpec::kbo_default(&sig),
            OrderingSpec::lpo_default(&sig),
        ] {
            let mut sorted = clauses.clone();
            sort_ground_clauses(&ord, &mut sorted);
            for w in sorted.windows(2) {
                assert_ne!(ord.compare_clauses(&w[0], &w[1]), Comparison::Greater);
            }
        }
    }

    #[test]
    fn greater_by_one_relation() {
        let (sig, ord, n) = load(NG);
        let m = ModelHandle::construct(&sig, &ord, &n, &Constraint::new(vec![]), 5).unwrap();
        assert!(m.holds_atom(&term(&sig, "G(s(0),0)")).value);
        assert!(m.holds_atom(&term(&sig, "G(s(s(0)),s(0))")).value);
        assert!(!m.holds_atom(&term(&sig, "G(0,0)")).value);
        assert!(!m.holds_atom(&term(&sig, "G(s(s(0)),0)")).value);
        assert_eq!(
            m.normal_form(&term(&sig, "G(s(0),0)")),
            Term::constant(TRUE_SYM)
        );
        assert!(m.is_left_reduced());
        assert!(m.is_decreasing());
        assert!(m.dump().contains("G(s(0),0) -> true"));
        assert_eq!(
            m.class_less(
                &Term::Var(Var::universal(0, sig.sort_by_name("nat").unwrap())),
                &term(&sig, "s(0)")
            ),
            Tri::False
        );
        let z = Term::Var(Var::universal(0, sig.sort_by_name("nat").unwrap()));
        let sz = Term::app(sig.lookup("s").unwrap(), vec![z.clone()]);
        assert_eq!(m.class_less(&z, &sz), Tri::True);
    }

    #[test]
    fn bigger_witness_breaks_the_model() {
        let (sig, ord, n) = load("sort t\nfunc b : t\nfunc a : t\nexistential u : t\naxiom -> a = b || u = a\naxiom a = b -> || u = b");
        let (a, b) = (term(&sig, "a"), term(&sig, "b"));
        let good =
            ModelHandle::construct(&sig, &ord, &n, &Constraint::new(vec![b.clone()]), 3).unwrap();
        assert_eq!(good.rules().count(), 0);
        assert!(
            good.check_models(&n, &Constraint::new(vec![b.clone()]), 3)
                .unwrap()
                .value
        );
        let bad =
            ModelHandle::construct(&sig, &ord, &n, &Constraint::new(vec![a.clone()]), 3).unwrap();
        assert_eq!(
            bad.rules()
                .map(|r| (r.lhs.clone(), r.rhs.clone()))
                .collect::<Vec<_>>(),
            vec![(a.clone(), b)]
        );
        assert!(
            !bad.check_models(&n, &Constraint::new(vec![a]), 3)
                .unwrap()
                .value
        );
    }

    #[test]
    fn witnesses_for_shared_existentials() {
        let (sig, ord, _) =
            load("sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred P : nat\nexistential v : nat");
        let m = ModelHandle::from_rules(
            &sig,
            &ord,
            vec![(term(&sig, "P(s(0))"), Term::constant(TRUE_SYM))],
            3,
        )
        .unwrap();
        let (_, _, one) = load("sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred P : nat\nexistential v : nat\naxiom -> P(x) || v = x");
        let (_, _, both) = load(
            "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred P : nat\nexistential v : nat\naxiom -> P(x) || v = x\naxiom -> P(s(x)) || v = x",
        );
        assert!(
            m.check_models(&one, &Constraint::new(vec![term(&sig, "s(0)")]), 3)
                .unwrap()
                .value
        );
        assert_eq!(
            m.find_witness(&one, 3).unwrap(),
            Some(Constraint::new(vec![term(&sig, "s(0)")]))
        );
        assert_eq!(m.find_witness(&both, 3).unwrap(), None);
    }

    #[test]
    fn non_free_symbols_are_not_certified() {
        let (sig, ord, n) = load(
            "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\naxiom s(0) = 0 ->\naxiom -> s(s(x)) = x",
        );
        let m = ModelHandle::construct(&sig, &ord, &n, &Constraint::new(vec![]), 5).unwrap();
        assert_eq!(
            m.class_less(&term(&sig, "0"), &term(&sig, "s(s(0))")),
            Tri::False
        );
        assert_eq!(m.normal_form(&term(&sig, "s(s(s(0)))")), term(&sig, "s(0)"));
        assert!(!m.is_free(sig.lookup("s").unwrap()));
    }
}
