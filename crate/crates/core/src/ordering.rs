//! Reduction orderings on terms and their extensions to equation
//! occurrences, clauses, constraints and constrained clauses.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::term::{Signature, Sym, Term, Var, TRUE_SYM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Comparison {
    pub fn flip(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            c => c,
        }
    }

    /// `Greater` or `Equal`.
    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equal)
    }

    pub fn from_ordering(o: Ordering) -> Comparison {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderingKind {
    Kbo,
    Lpo,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("terms of different sorts cannot be compared")]
    IllSorted,
    #[error("inadmissible weights: {0}")]
    Inadmissible(String),
    #[error("unknown symbol `{0}` in precedence")]
    UnknownSymbol(String),
}

/// Precedence, symbol weights and the variable weight. Higher rank means
/// greater in the precedence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingSpec {
    pub kind: OrderingKind,
    rank: Vec<u32>,
    weights: Vec<u32>,
    pub var_weight: u32,
}

impl OrderingSpec {
    /// Unit weights; later-declared symbols are greater and `true` is minimal.
    pub fn kbo_default(sig: &Signature) -> OrderingSpec {
        let n = sig.num_symbols();
        OrderingSpec {
            kind: OrderingKind::Kbo,
            rank: (0..n as u32).collect(),
            weights: vec![1; n],
            var_weight: 1,
        }
    }

    pub fn lpo_default(sig: &Signature) -> OrderingSpec {
        OrderingSpec {
            kind: OrderingKind::Lpo,
            ..Self::kbo_default(sig)
        }
    }

    /// Puts `order` (greatest first) above every unlisted symbol; `true`
    /// stays minimal.
    pub fn with_precedence(
        mut self,
        sig: &Signature,
        order: &[&str],
    ) -> Result<OrderingSpec, OrderingError> {
        let mut listed = Vec::new();
        for name in order {
            let f = sig
                .lookup(name)
                .ok_or_else(|| OrderingError::UnknownSymbol((*name).into()))?;
            if f != TRUE_SYM && !listed.contains(&f) {
                listed.push(f);
            }
        }
        let mut rest: Vec<Sym> = sig
            .symbols()
            .filter(|f| *f != TRUE_SYM && !listed.contains(f))
            .collect();
        rest.sort_by_key(|f| self.rank[f.0 as usize]);
        for (r, f) in (1..).zip(rest.into_iter().chain(listed.into_iter().rev())) {
            self.rank[f.0 as usize] = r;
        }
        self.rank[TRUE_SYM.0 as usize] = 0;
        Ok(self)
    }

    /// Extends to symbols declared after construction, placing them on top.
    pub fn extend_to(&mut self, sig: &Signature) {
        let mut top = self.rank.iter().copied().max().unwrap_or(0);
        while self.rank.len() < sig.num_symbols() {
            top += 1;
            self.rank.push(top);
            self.weights.push(1);
        }
    }

    /// Places the given symbols below every other symbol except `true`.
    pub fn put_at_bottom(&mut self, syms: &[Sym]) {
        for r in self.rank.iter_mut() {
            *r += syms.len() as u32;
        }
        for (i, f) in syms.iter().enumerate() {
            self.rank[f.0 as usize] = 1 + i as u32;
        }
        self.rank[TRUE_SYM.0 as usize] = 0;
    }

    pub fn set_weight(&mut self, f: Sym, w: u32) {
        self.weights[f.0 as usize] = w;
    }

    pub fn symbol_weight(&self, f: Sym) -> u32 {
        self.weights[f.0 as usize]
    }

    pub fn precedence_cmp(&self, f: Sym, g: Sym) -> Ordering {
        self.rank[f.0 as usize].cmp(&self.rank[g.0 as usize])
    }

    /// Symbols from greatest to least.
    pub fn precedence_list(&self) -> Vec<Sym> {
        let mut syms: Vec<Sym> = (0..self.rank.len() as u32).map(Sym).collect();
        syms.sort_by(|a, b| self.precedence_cmp(*b, *a));
        syms
    }

    /// KBO admissibility: positive variable weight no larger than any
    /// constant's weight, and a weight-0 unary symbol must be maximal.
    pub fn validate(&self, sig: &Signature) -> Result<(), OrderingError> {
        if self.var_weight == 0 {
            return Err(OrderingError::Inadmissible(
                "variable weight must be positive".into(),
            ));
        }
        let max_rank = self.rank.iter().copied().max().unwrap_or(0);
        for f in sig.symbols() {
            let d = sig.decl(f);
            let w = self.weights[f.0 as usize];
            if d.args.is_empty() && w < self.var_weight {
                return Err(OrderingError::Inadmissible(format!(
                    "constant `{}` is lighter than a variable",
                    d.name
                )));
            }
            if w == 0 && (d.args.len() != 1 || self.rank[f.0 as usize] != max_rank) {
                return Err(OrderingError::Inadmissible(format!(
                    "weight-0 symbol `{}` must be unary and maximal",
                    d.name
                )));
            }
        }
        Ok(())
    }

    pub fn weight(&self, t: &Term) -> u64 {
        match t {
            Term::Var(_) => self.var_weight as u64,
            Term::App(f, args) => {
                self.weights[f.0 as usize] as u64 + args.iter().map(|a| self.weight(a)).sum::<u64>()
            }
        }
    }

    /// Sort-checked comparison.
    pub fn compare_terms(
        &self,
        sig: &Signature,
        s: &Term,
        t: &Term,
    ) -> Result<Comparison, OrderingError> {
        if sig.sort_of(s) != sig.sort_of(t) {
            return Err(OrderingError::IllSorted);
        }
        Ok(self.compare(s, t))
    }

    /// Compares two terms of any sort.
    pub fn compare(&self, s: &Term, t: &Term) -> Comparison {
        if s == t {
            return Comparison::Equal;
        }
        match self.kind {
            OrderingKind::Kbo => self.kbo(s, t),
            OrderingKind::Lpo => self.lpo(s, t),
        }
    }

    pub fn greater(&self, s: &Term, t: &Term) -> bool {
        self.compare(s, t) == Comparison::Greater
    }

    /// KBO on ground terms, which needs no variable bookkeeping.
    fn kbo_ground(&self, s: &Term, t: &Term) -> Ordering {
        let (Term::App(f, fa), Term::App(g, ga)) = (s, t) else {
            unreachable!("ground terms")
        };
        self.weight(s)
            .cmp(&self.weight(t))
            .then_with(|| self.precedence_cmp(*f, *g))
            .then_with(|| {
                fa.iter()
                    .zip(ga)
                    .map(|(a, b)| {
                        if a == b {
                            Ordering::Equal
                        } else {
                            self.kbo_ground(a, b)
                        }
                    })
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }

    fn kbo(&self, s: &Term, t: &Term) -> Comparison {
        if s == t {
            return Comparison::Equal;
        }
        if s.is_ground() && t.is_ground() {
            return Comparison::from_ordering(self.kbo_ground(s, t));
        }
        let mut balance: Vec<(Var, i64)> = Vec::new();
        let mut bump = |v: Var, d: i64| match balance.iter_mut().find(|(w, _)| *w == v) {
            Some(e) => e.1 += d,
            None => balance.push((v, d)),
        };
        s.for_each_var(&mut |v| bump(v, 1));
        t.for_each_var(&mut |v| bump(v, -1));
        let s_covers = balance.iter().all(|(_, d)| *d >= 0);
        let t_covers = balance.iter().all(|(_, d)| *d <= 0);
        let (ws, wt) = (self.weight(s), self.weight(t));
        let gt = if s_covers {
            Comparison::Greater
        } else {
            Comparison::Incomparable
        };
        let lt = if t_covers {
            Comparison::Less
        } else {
            Comparison::Incomparable
        };
        match ws.cmp(&wt) {
            Ordering::Greater => gt,
            Ordering::Less => lt,
            Ordering::Equal => match (s, t) {
                (Term::Var(_), Term::Var(_)) => Comparison::Incomparable,
                (Term::Var(x), _) => {
                    if t.contains_var(*x) {
                        lt
                    } else {
                        Comparison::Incomparable
                    }
                }
                (_, Term::Var(y)) => {
                    if s.contains_var(*y) {
                        gt
                    } else {
                        Comparison::Incomparable
                    }
                }
                (Term::App(f, fa), Term::App(g, ga)) => match self.precedence_cmp(*f, *g) {
                    Ordering::Greater => gt,
                    Ordering::Less => lt,
                    Ordering::Equal => {
                        for (a, b) in fa.iter().zip(ga) {
                            match self.kbo(a, b) {
                                Comparison::Equal => continue,
                                Comparison::Greater => return gt,
                                Comparison::Less => return lt,
                                Comparison::Incomparable => return Comparison::Incomparable,
                            }
                        }
                        Comparison::Equal
                    }
                },
            },
        }
    }

    fn lpo_gt(&self, s: &Term, t: &Term) -> bool {
        match (s, t) {
            (Term::Var(_), _) => false,
            (_, Term::Var(x)) => s != t && s.contains_var(*x),
            (Term::App(f, fa), Term::App(g, ga)) => {
                if fa.iter().any(|a| a == t || self.lpo_gt(a, t)) {
                    return true;
                }
                match self.precedence_cmp(*f, *g) {
                    Ordering::Greater => ga.iter().all(|b| self.lpo_gt(s, b)),
                    Ordering::Less => false,
                    Ordering::Equal => {
                        for (a, b) in fa.iter().zip(ga) {
                            if a == b {
                                continue;
                            }
                            return self.lpo_gt(a, b) && ga.iter().all(|b| self.lpo_gt(s, b));
                        }
                        false
                    }
                }
            }
        }
    }

    fn lpo(&self, s: &Term, t: &Term) -> Comparison {
        if self.lpo_gt(s, t) {
            Comparison::Greater
        } else if self.lpo_gt(t, s) {
            Comparison::Less
        } else {
            Comparison::Incomparable
        }
    }

    /// Total order on ground terms, for sorting.
    pub fn ground_cmp(&self, s: &Term, t: &Term) -> Ordering {
        match self.compare(s, t) {
            Comparison::Less => Ordering::Less,
            Comparison::Greater => Ordering::Greater,
            _ => s.cmp(t),
        }
    }

    pub fn compare_occurrences(&self, a: &Occurrence<'_>, b: &Occurrence<'_>) -> Comparison {
        let (ma, mb) = (a.as_multiset(), b.as_multiset());
        compare_multisets(&ma, &mb, |x, y| {
            compare_multisets(x, y, |s, t| self.compare(s, t))
        })
    }

    pub fn compare_clauses(&self, c: &Clause, d: &Clause) -> Comparison {
        let (oc, od) = (occurrences(c), occurrences(d));
        compare_multisets(&oc, &od, |a, b| self.compare_occurrences(a, b))
    }

    /// Pointwise comparison of constraints with the same spine.
    pub fn compare_constraints(&self, a: &Constraint, b: &Constraint) -> Comparison {
        let mut result = Comparison::Equal;
        for (s, t) in a.terms.iter().zip(&b.terms) {
            match (result, self.compare(s, t)) {
                (_, Comparison::Incomparable) => return Comparison::Incomparable,
                (_, Comparison::Equal) => {}
                (Comparison::Equal, c) => result = c,
                (r, c) if r == c => {}
                _ => return Comparison::Incomparable,
            }
        }
        result
    }

    /// Lexicographic: constraint first, then clause.
    pub fn compare_constrained(&self, a: &ConstrainedClause, b: &ConstrainedClause) -> Comparison {
        match self.compare_constraints(a.constraint(), b.constraint()) {
            Comparison::Equal if a.constraint() == b.constraint() => {
                self.compare_clauses(a.clause(), b.clause())
            }
            Comparison::Equal => Comparison::Incomparable,
            c => c,
        }
    }

    /// No other occurrence is strictly greater than occurrence `i`.
    pub fn is_maximal(&self, clause: &Clause, i: LitRef) -> bool {
        let occ = occurrences(clause);
        let k = i.index(clause);
        occ.iter()
            .enumerate()
            .all(|(j, o)| j == k || self.compare_occurrences(o, &occ[k]) != Comparison::Greater)
    }

    /// No other occurrence is greater than or equal to occurrence `i`.
    pub fn is_strictly_maximal(&self, clause: &Clause, i: LitRef) -> bool {
        let occ = occurrences(clause);
        let k = i.index(clause);
        occ.iter()
            .enumerate()
            .all(|(j, o)| j == k || !self.compare_occurrences(o, &occ[k]).is_ge())
    }
}

/// A literal of a clause: antecedent or succedent index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LitRef {
    Ante(usize),
    Succ(usize),
}

impl LitRef {
    fn index(self, c: &Clause) -> usize {
        match self {
            LitRef::Ante(i) => i,
            LitRef::Succ(i) => c.antecedent.len() + i,
        }
    }
}

/// An equation occurrence: antecedent `s≈t` is `{{s,t}}`, succedent `s≈t`
/// is `{{s},{t}}`.
#[derive(Clone, Copy, Debug)]
pub enum Occurrence<'a> {
    Antecedent(&'a Equation),
    Succedent(&'a Equation),
}

impl<'a> Occurrence<'a> {
    pub fn as_multiset(&self) -> Vec<Vec<&'a Term>> {
        match self {
            Occurrence::Antecedent(e) => {
                let (s, t) = e.sides();
                vec![vec![s, t]]
            }
            Occurrence::Succedent(e) => {
                let (s, t) = e.sides();
                vec![vec![s], vec![t]]
            }
        }
    }
}

pub fn occurrences(c: &Clause) -> Vec<Occurrence<'_>> {
    c.antecedent
        .iter()
        .map(Occurrence::Antecedent)
        .chain(c.succedent.iter().map(Occurrence::Succedent))
        .collect()
}

/// Multiset extension of a partial order given by `cmp`.
pub fn compare_multisets<T>(m: &[T], n: &[T], cmp: impl Fn(&T, &T) -> Comparison) -> Comparison {
    let mut used_n = vec![false; n.len()];
    let mut rest_m = Vec::new();
    for x in m {
        match (0..n.len()).find(|&j| !used_n[j] && cmp(x, &n[j]) == Comparison::Equal) {
            Some(j) => used_n[j] = true,
            None => rest_m.push(x),
        }
    }
    let rest_n: Vec<&T> = n
        .iter()
        .zip(&used_n)
        .filter(|(_, u)| !**u)
        .map(|(y, _)| y)
        .collect();
    match (rest_m.is_empty(), rest_n.is_empty()) {
        (true, true) => Comparison::Equal,
        (false, true) => Comparison::Greater,
        (true, false) => Comparison::Less,
        (false, false) => {
            if rest_n
                .iter()
                .all(|y| rest_m.iter().any(|x| cmp(x, y) == Comparison::Greater))
            {
                Comparison::Greater
            } else if rest_m
                .iter()
                .all(|x| rest_n.iter().any(|y| cmp(y, x) == Comparison::Greater))
            {
                Comparison::Less
            } else {
                Comparison::Incomparable
            }
        }
    }
}
