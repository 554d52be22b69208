//! Equations, clauses, constraints and constrained clauses.
//!
//! Constrained clauses are stored in a canonical variable numbering so that
//! variants compare equal syntactically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::term::{Signature, SortId, Substitution, Term, Var, VarKind, PRED_SORT, TRUE_SYM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClauseError {
    #[error("constraint has {found} entries but there are {expected} existential variables")]
    SpineMismatch { expected: usize, found: usize },
    #[error("existential variable in a clause or constraint term")]
    ExistentialInTerm,
    #[error("constraint entry {index} has sort `{found}`, expected `{expected}`")]
    ConstraintSort {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("equation sides have different sorts")]
    EquationSorts,
}

/// An unordered pair of terms; the sides are stored in syntactic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Equation {
    lhs: Term,
    rhs: Term,
}

impl Equation {
    pub fn new(a: Term, b: Term) -> Equation {
        if a <= b {
            Equation { lhs: a, rhs: b }
        } else {
            Equation { lhs: b, rhs: a }
        }
    }

    /// The atom `P(args)` encoded as `f_P(args) ≈ true`.
    pub fn atom(pred_term: Term) -> Equation {
        Equation::new(pred_term, Term::constant(TRUE_SYM))
    }

    pub fn sides(&self) -> (&Term, &Term) {
        (&self.lhs, &self.rhs)
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Both readings `(l, r)`; a single one when the sides coincide.
    pub fn orientations(&self) -> Vec<(&Term, &Term)> {
        if self.is_trivial() {
            vec![(&self.lhs, &self.rhs)]
        } else {
            vec![(&self.lhs, &self.rhs), (&self.rhs, &self.lhs)]
        }
    }

    pub fn map(&self, f: impl Fn(&Term) -> Term) -> Equation {
        Equation::new(f(&self.lhs), f(&self.rhs))
    }

    pub fn apply(&self, s: &Substitution) -> Equation {
        self.map(|t| s.apply(t))
    }

    pub fn is_predicative(&self, sig: &Signature) -> bool {
        sig.sort_of(&self.lhs) == PRED_SORT
    }

    pub fn size(&self) -> usize {
        self.lhs.size() + self.rhs.size()
    }

    pub fn is_ground(&self) -> bool {
        self.lhs.is_ground() && self.rhs.is_ground()
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        self.lhs.for_each_var(f);
        self.rhs.for_each_var(f);
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> EquationDisplay<'a> {
        EquationDisplay { sig, eq: self }
    }
}

pub struct EquationDisplay<'a> {
    sig: &'a Signature,
    eq: &'a Equation,
}

impl fmt::Display for EquationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.eq.sides();
        let is_true = |t: &Term| t.head() == Some(TRUE_SYM);
        if is_true(b) && a.head().is_some_and(|h| self.sig.is_predicate(h)) {
            return write!(f, "{}", self.sig.term(a));
        }
        if is_true(a) && b.head().is_some_and(|h| self.sig.is_predicate(h)) {
            return write!(f, "{}", self.sig.term(b));
        }
        // Larger side first; on equal size a variable leads, then the later symbol.
        let b_first = match a.size().cmp(&b.size()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => !a.is_var() || b.is_var(),
        };
        let (first, second) = if b_first { (b, a) } else { (a, b) };
        write!(f, "{}≈{}", self.sig.term(first), self.sig.term(second))
    }
}

/// A sequent `Γ → Δ`; both sides are sorted multisets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Clause {
    pub antecedent: Vec<Equation>,
    pub succedent: Vec<Equation>,
}

impl Clause {
    pub fn new(mut antecedent: Vec<Equation>, mut succedent: Vec<Equation>) -> Clause {
        antecedent.sort();
        succedent.sort();
        Clause {
            antecedent,
            succedent,
        }
    }

    pub fn empty() -> Clause {
        Clause::default()
    }

    pub fn is_empty(&self) -> bool {
        self.antecedent.is_empty() && self.succedent.is_empty()
    }

    pub fn len(&self) -> usize {
        self.antecedent.len() + self.succedent.len()
    }

    pub fn is_horn(&self) -> bool {
        self.succedent.len() <= 1
    }

    pub fn apply(&self, s: &Substitution) -> Clause {
        Clause::new(
            self.antecedent.iter().map(|e| e.apply(s)).collect(),
            self.succedent.iter().map(|e| e.apply(s)).collect(),
        )
    }

    pub fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Clause {
        Clause::new(
            self.antecedent.iter().map(|e| e.map(f)).collect(),
            self.succedent.iter().map(|e| e.map(f)).collect(),
        )
    }

    /// `Δ` contains some `t ≈ t`, or `Γ` and `Δ` share an equation.
    pub fn is_tautology(&self) -> bool {
        self.succedent.iter().any(Equation::is_trivial)
            || self.antecedent.iter().any(|e| self.succedent.contains(e))
    }

    pub fn is_ground(&self) -> bool {
        self.antecedent
            .iter()
            .chain(&self.succedent)
            .all(Equation::is_ground)
    }

    pub fn size(&self) -> usize {
        self.antecedent
            .iter()
            .chain(&self.succedent)
            .map(Equation::size)
            .sum()
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        for e in self.antecedent.iter().chain(&self.succedent) {
            e.for_each_var(f);
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.for_each_var(&mut |v| {
            out.insert(v);
        });
        out
    }

    /// Sub-multiset test.
    pub fn is_submultiset_of(&self, other: &Clause) -> bool {
        fn sub(a: &[Equation], b: &[Equation]) -> bool {
            let mut used = vec![false; b.len()];
            a.iter().all(
                |e| match b.iter().enumerate().position(|(i, f)| !used[i] && f == e) {
                    Some(i) => {
                        used[i] = true;
                        true
                    }
                    None => false,
                },
            )
        }
        sub(&self.antecedent, &other.antecedent) && sub(&self.succedent, &other.succedent)
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> ClauseDisplay<'a> {
        ClauseDisplay { sig, clause: self }
    }
}

pub struct ClauseDisplay<'a> {
    sig: &'a Signature,
    clause: &'a Clause,
}

impl fmt::Display for ClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clause.is_empty() {
            return write!(f, "□");
        }
        let join = |eqs: &[Equation]| {
            eqs.iter()
                .map(|e| e.display(self.sig).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let (a, s) = (join(&self.clause.antecedent), join(&self.clause.succedent));
        match (a.is_empty(), s.is_empty()) {
            (true, _) => write!(f, "→ {s}"),
            (false, true) => write!(f, "{a} →"),
            (false, false) => write!(f, "{a} → {s}"),
        }
    }
}

/// The sequence `v₁≈t₁, …, vₙ≈tₙ`; entry `i` belongs to existential `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constraint {
    pub terms: Vec<Term>,
}

impl Constraint {
    pub fn new(terms: Vec<Term>) -> Constraint {
        Constraint { terms }
    }

    /// `vᵢ ≈ xᵢ` with distinct fresh universal variables starting at `first_id`.
    pub fn fresh(sig: &Signature, first_id: u32) -> Constraint {
        Constraint {
            terms: sig
                .existentials()
                .iter()
                .enumerate()
                .map(|(i, e)| Term::var(Var::universal(first_id + i as u32, e.sort)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, s: &Substitution) -> Constraint {
        Constraint {
            terms: self.terms.iter().map(|t| s.apply(t)).collect(),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.terms.iter().all(Term::is_ground)
    }

    /// Every entry is a variable.
    pub fn is_variable_only(&self) -> bool {
        self.terms.iter().all(Term::is_var)
    }

    pub fn size(&self) -> usize {
        self.terms.iter().map(Term::size).sum()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(Term::vars).collect()
    }

    pub fn validate(&self, sig: &Signature) -> Result<(), ClauseError> {
        let n = sig.existentials().len();
        if self.terms.len() != n {
            return Err(ClauseError::SpineMismatch {
                expected: n,
                found: self.terms.len(),
            });
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.has_existential() {
                return Err(ClauseError::ExistentialInTerm);
            }
            let expected = sig.existentials()[i].sort;
            let found = sig
                .check_term(t)
                .map_err(|_| ClauseError::ExistentialInTerm)?;
            if found != expected {
                return Err(ClauseError::ConstraintSort {
                    index: i,
                    expected: sig.sort_name(expected).into(),
                    found: sig.sort_name(found).into(),
                });
            }
        }
        Ok(())
    }

    /// Renders every entry, without elision.
    pub fn display<'a>(&'a self, sig: &'a Signature) -> ConstraintDisplay<'a> {
        ConstraintDisplay {
            sig,
            constraint: self,
            hidden: Vec::new(),
        }
    }
}

pub struct ConstraintDisplay<'a> {
    sig: &'a Signature,
    constraint: &'a Constraint,
    hidden: Vec<bool>,
}

impl fmt::Display for ConstraintDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .constraint
            .terms
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.hidden.get(*i).copied().unwrap_or(false))
            .map(|(i, t)| format!("{}≈{}", self.sig.existentials()[i].name, self.sig.term(t)))
            .collect();
        if parts.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// A clause together with its constraint, in canonical variable numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstrainedClause {
    constraint: Constraint,
    clause: Clause,
}

const CANONICAL_CANDIDATE_CAP: usize = 720;

impl ConstrainedClause {
    /// Validates and canonicalizes.
    pub fn new(
        sig: &Signature,
        constraint: Constraint,
        clause: Clause,
    ) -> Result<ConstrainedClause, ClauseError> {
        constraint.validate(sig)?;
        for e in clause.antecedent.iter().chain(&clause.succedent) {
            let (a, b) = e.sides();
            if a.has_existential() || b.has_existential() {
                return Err(ClauseError::ExistentialInTerm);
            }
            match (sig.check_term(a), sig.check_term(b)) {
                (Ok(x), Ok(y)) if x == y => {}
                _ => return Err(ClauseError::EquationSorts),
            }
        }
        Ok(Self::canonical(constraint, clause))
    }

    /// Canonicalizes without validation; inputs must be well-formed.
    pub fn canonical(constraint: Constraint, clause: Clause) -> ConstrainedClause {
        let mut numbering: BTreeMap<Var, u32> = BTreeMap::new();
        for t in &constraint.terms {
            t.for_each_var(&mut |v| {
                let n = numbering.len() as u32;
                numbering.entry(v).or_insert(n);
            });
        }
        let constraint = rename(&constraint.terms, &numbering);
        let clause = canonical_clause(&clause, &numbering);
        ConstrainedClause {
            constraint: Constraint::new(constraint),
            clause,
        }
    }

    pub fn unconstrained(sig: &Signature, clause: Clause) -> ConstrainedClause {
        let first = clause.vars().iter().map(|v| v.id + 1).max().unwrap_or(0);
        Self::canonical(Constraint::fresh(sig, first), clause)
    }

    pub fn constraint(&self) -> &Constraint {
        &self.constraint
    }

    pub fn clause(&self) -> &Clause {
        &self.clause
    }

    pub fn into_parts(self) -> (Constraint, Clause) {
        (self.constraint, self.clause)
    }

    pub fn is_empty_clause(&self) -> bool {
        self.clause.is_empty()
    }

    pub fn is_tautology(&self) -> bool {
        self.clause.is_tautology()
    }

    pub fn is_horn(&self) -> bool {
        self.clause.is_horn()
    }

    pub fn apply(&self, s: &Substitution) -> ConstrainedClause {
        Self::canonical(self.constraint.apply(s), self.clause.apply(s))
    }

    /// Symbol count of clause and constraint.
    pub fn weight(&self) -> usize {
        self.clause.size() + self.constraint.size()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.clause.vars();
        v.extend(self.constraint.vars());
        v
    }

    pub fn max_var_id(&self) -> Option<u32> {
        self.vars().iter().map(|v| v.id).max()
    }

    /// Copy with universal variable ids shifted by `offset` (not canonical).
    pub fn shifted_parts(&self, offset: u32) -> (Constraint, Clause) {
        (
            Constraint::new(
                self.constraint
                    .terms
                    .iter()
                    .map(|t| t.shift(offset))
                    .collect(),
            ),
            self.clause.map_terms(&|t| t.shift(offset)),
        )
    }

    /// The constraint is variable-only, its variables are distinct and none
    /// occurs in the clause: semantically no constraint at all.
    pub fn is_unconstrained(&self) -> bool {
        let cv = self.clause.vars();
        let mut seen = BTreeSet::new();
        self.constraint.terms.iter().all(|t| match t.as_var() {
            Some(v) => seen.insert(v) && !cv.contains(&v),
            None => false,
        })
    }

    /// Which constraint entries are hidden in displays: all of them when the
    /// clause is unconstrained, none otherwise.
    pub fn elided_entries(&self) -> Vec<bool> {
        let trivial = self.trivial_entries();
        let all = trivial.iter().all(|h| *h);
        vec![all; trivial.len()]
    }

    /// Which constraint entries are `vᵢ≈x` with `x` occurring nowhere else.
    pub fn trivial_entries(&self) -> Vec<bool> {
        let cv = self.clause.vars();
        let mut counts: BTreeMap<Var, usize> = BTreeMap::new();
        for t in &self.constraint.terms {
            t.for_each_var(&mut |v| *counts.entry(v).or_default() += 1);
        }
        self.constraint
            .terms
            .iter()
            .map(|t| match t.as_var() {
                Some(v) => counts[&v] == 1 && !cv.contains(&v),
                None => false,
            })
            .collect()
    }

    /// `Γ → Δ ∥ α` with elided trivial constraint entries.
    pub fn display<'a>(&'a self, sig: &'a Signature) -> ConstrainedDisplay<'a> {
        ConstrainedDisplay {
            sig,
            cc: self,
            constraint_first: false,
        }
    }

    /// `α ∥ Γ → Δ`, as used in derivation traces.
    pub fn display_constraint_first<'a>(&'a self, sig: &'a Signature) -> ConstrainedDisplay<'a> {
        ConstrainedDisplay {
            sig,
            cc: self,
            constraint_first: true,
        }
    }

    pub fn constraint_display<'a>(&'a self, sig: &'a Signature) -> ConstraintDisplay<'a> {
        ConstraintDisplay {
            sig,
            constraint: &self.constraint,
            hidden: self.elided_entries(),
        }
    }
}

pub struct ConstrainedDisplay<'a> {
    sig: &'a Signature,
    cc: &'a ConstrainedClause,
    constraint_first: bool,
}

impl fmt::Display for ConstrainedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Variables are renamed for display so that elided entries do not
        // consume names.
        let hidden = self.cc.elided_entries();
        let mut order = Vec::new();
        for (t, h) in self.cc.constraint.terms.iter().zip(&hidden) {
            if !h {
                t.vars_in_order(&mut order);
            }
        }
        for e in self
            .cc
            .clause
            .antecedent
            .iter()
            .chain(&self.cc.clause.succedent)
        {
            let (a, b) = e.sides();
            a.vars_in_order(&mut order);
            b.vars_in_order(&mut order);
        }
        let numbering: BTreeMap<Var, u32> = order
            .iter()
            .enumerate()
            .map(|(i, v)| (*v, i as u32))
            .collect();
        let constraint = Constraint::new(rename(&self.cc.constraint.terms, &numbering));
        let clause = self
            .cc
            .clause
            .map_terms(&|t| rename(std::slice::from_ref(t), &numbering).remove(0));
        let all_hidden = hidden.iter().all(|h| *h);
        let alpha = ConstraintDisplay {
            sig: self.sig,
            constraint: &constraint,
            hidden,
        };
        let clause = clause.display(self.sig);
        if self.constraint_first {
            write!(f, "{alpha} ∥ {clause}")
        } else if all_hidden {
            write!(f, "{clause}")
        } else {
            write!(f, "{clause} ∥ {alpha}")
        }
    }
}

fn rename(terms: &[Term], numbering: &BTreeMap<Var, u32>) -> Vec<Term> {
    terms
        .iter()
        .map(|t| {
            t.map_vars(&mut |v| match numbering.get(&v) {
                Some(&n) => Term::Var(Var {
                    kind: VarKind::Universal,
                    id: n,
                    sort: v.sort,
                }),
                None => Term::Var(v),
            })
        })
        .collect()
}

/// Shape key of a term: numbered variables keep their number, the others are
/// anonymous.
fn blind_key(t: &Term, numbering: &BTreeMap<Var, u32>, out: &mut Vec<i64>) {
    match t {
        Term::Var(v) => match numbering.get(v) {
            Some(&n) => out.extend([-2, n as i64, v.sort.0 as i64]),
            None => out.extend([-1, v.sort.0 as i64]),
        },
        Term::App(f, args) => {
            out.extend([f.0 as i64, args.len() as i64]);
            for a in args {
                blind_key(a, numbering, out);
            }
        }
    }
}

struct Slot<'a> {
    key: Vec<i64>,
    sides: [&'a Term; 2],
    symmetric: bool,
}

fn slots<'a>(eqs: &'a [Equation], numbering: &BTreeMap<Var, u32>) -> Vec<Slot<'a>> {
    let mut out: Vec<Slot<'a>> = eqs
        .iter()
        .map(|e| {
            let (a, b) = e.sides();
            let (mut ka, mut kb) = (Vec::new(), Vec::new());
            blind_key(a, numbering, &mut ka);
            blind_key(b, numbering, &mut kb);
            let symmetric = ka == kb;
            let (sides, lo, hi) = if ka <= kb {
                ([a, b], ka, kb)
            } else {
                ([b, a], kb, ka)
            };
            let mut key = lo;
            key.push(i64::MIN);
            key.extend(hi);
            Slot {
                key,
                sides,
                symmetric,
            }
        })
        .collect();
    out.sort_by(|x, y| x.key.cmp(&y.key));
    out
}

/// Traversal orders of one side: permutations within groups of equal keys
/// and flips of symmetric slots.
fn traversals(slots: &[Slot<'_>]) -> Vec<Vec<(usize, bool)>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, s) in slots.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if slots[g[0]].key == s.key => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut acc: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
    for g in groups {
        let mut next = Vec::new();
        for perm in permutations(&g) {
            let flips: Vec<usize> = perm
                .iter()
                .copied()
                .filter(|&i| slots[i].symmetric)
                .collect();
            for mask in 0..(1u32 << flips.len().min(16)) {
                let choice: Vec<(usize, bool)> = perm
                    .iter()
                    .map(|&i| {
                        (
                            i,
                            flips
                                .iter()
                                .position(|&j| j == i)
                                .is_some_and(|b| mask >> b & 1 == 1),
                        )
                    })
                    .collect();
                for prefix in &acc {
                    let mut p = prefix.clone();
                    p.extend(choice.iter().copied());
                    next.push(p);
                    if next.len() > CANONICAL_CANDIDATE_CAP {
                        break;
                    }
                }
            }
        }
        acc = next;
        if acc.len() > CANONICAL_CANDIDATE_CAP {
            acc.truncate(1);
        }
    }
    acc
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
            if out.len() > CANONICAL_CANDIDATE_CAP {
                return out;
            }
        }
    }
    out
}

fn canonical_clause(clause: &Clause, base: &BTreeMap<Var, u32>) -> Clause {
    let ante = slots(&clause.antecedent, base);
    let succ = slots(&clause.succedent, base);
    let ta = traversals(&ante);
    let ts = traversals(&succ);
    let mut best: Option<Clause> = None;
    'outer: for a in &ta {
        for s in &ts {
            let mut numbering = base.clone();
            let mut visit = |slots: &[Slot<'_>], order: &[(usize, bool)]| {
                for &(i, flip) in order {
                    let sides = slots[i].sides;
                    let seq = if flip { [sides[1], sides[0]] } else { sides };
                    for t in seq {
                        t.for_each_var(&mut |v| {
                            let n = numbering.len() as u32;
                            numbering.entry(v).or_insert(n);
                        });
                    }
                }
            };
            visit(&ante, a);
            visit(&succ, s);
            let map = |eqs: &[Equation]| -> Vec<Equation> {
                eqs.iter()
                    .map(|e| {
                        let (x, y) = e.sides();
                        let r = rename(&[x.clone(), y.clone()], &numbering);
                        Equation::new(r[0].clone(), r[1].clone())
                    })
                    .collect()
            };
            let cand = Clause::new(map(&clause.antecedent), map(&clause.succedent));
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
            if ta.len() * ts.len() > CANONICAL_CANDIDATE_CAP {
                break 'outer;
            }
        }
    }
    best.unwrap_or_default()
}

/// Ground instances whose universal variables range over ground terms of
/// weight at most `bound`.
pub fn ground_instances(
    cc: &ConstrainedClause,
    sig: &Signature,
    ord: &crate::ordering::OrderingSpec,
    bound: u64,
) -> Result<Vec<ConstrainedClause>, crate::ground::GroundError> {
    let vars: Vec<Var> = cc.vars().into_iter().collect();
    let mut pools: BTreeMap<SortId, Vec<Term>> = BTreeMap::new();
    for v in &vars {
        if let std::collections::btree_map::Entry::Vacant(e) = pools.entry(v.sort) {
            e.insert(crate::ground::enumerate_ground(sig, ord, v.sort, bound)?);
        }
    }
    let mut out = Vec::new();
    for_each_assignment(&vars, &pools, &mut |s| out.push(cc.apply(s)));
    Ok(out)
}

pub(crate) fn for_each_assignment(
    vars: &[Var],
    pools: &BTreeMap<SortId, Vec<Term>>,
    f: &mut impl FnMut(&Substitution),
) {
    fn go(
        i: usize,
        vars: &[Var],
        pools: &BTreeMap<SortId, Vec<Term>>,
        cur: &mut Substitution,
        f: &mut impl FnMut(&Substitution),
    ) {
        if i == vars.len() {
            f(cur);
            return;
        }
        for t in &pools[&vars[i].sort] {
            cur.insert(vars[i], t.clone());
            go(i + 1, vars, pools, cur, f);
        }
    }
    go(0, vars, pools, &mut Substitution::new(), f);
}
