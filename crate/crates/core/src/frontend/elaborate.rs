//! Elaboration of parsed problems into typed terms and clauses.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::clause::{Clause, Equation};
use crate::ordering::{OrderingKind, OrderingSpec};
use crate::term::{Signature, SortId, Term, TermError, Var, PRED_SORT};

use super::syntax::{
    parse_problem, ClauseAst, FormulaAst, Item, LitAst, ProblemFile, Quant, Span, SyntaxError,
    TermAst,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct InputError {
    pub span: Option<Span>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(s) => write!(f, "{s}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl InputError {
    pub fn new(span: Option<Span>, message: impl Into<String>) -> InputError {
        InputError {
            span,
            message: message.into(),
        }
    }

    pub(crate) fn at(span: Span, message: impl Into<String>) -> InputError {
        InputError::new(Some(span), message)
    }
}

impl From<SyntaxError> for InputError {
    fn from(e: SyntaxError) -> InputError {
        InputError::at(e.span, e.message)
    }
}

fn term_err(span: Span) -> impl Fn(TermError) -> InputError {
    move |e| InputError::at(span, e.to_string())
}

/// A clause whose constraint lists only the explicitly given entries, keyed
/// by existential index; missing entries become fresh variables later.
#[derive(Clone, Debug)]
pub struct RawClause {
    pub clause: Clause,
    pub constraint: Vec<(usize, Term)>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundVar {
    pub name: String,
    pub var: Var,
    pub rename: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Lit(Equation, bool),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

#[derive(Clone, Debug)]
pub struct Conjecture {
    pub universals: Vec<BoundVar>,
    pub existentials: Vec<BoundVar>,
    pub matrix: Formula,
    pub span: Span,
}

/// `induct x := lower < upper`, naming a conjecture variable or a declared
/// existential.
#[derive(Clone, Debug)]
pub struct InductHint {
    pub var: String,
    pub lower: Term,
    pub upper: Term,
    pub span: Span,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub sig: Signature,
    pub axioms: Vec<RawClause>,
    pub conjecture: Option<Conjecture>,
    pub precedence: Option<Vec<String>>,
    pub weights: Vec<(String, u32)>,
    pub ordering: Option<OrderingKind>,
    pub hints: Vec<InductHint>,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, InputError> {
        elaborate(&parse_problem(text)?)
    }

    /// The ordering selected by the file's directives, over `sig` (which may
    /// extend the problem's own signature).
    pub fn ordering_for(&self, sig: &Signature) -> Result<OrderingSpec, InputError> {
        let base = match self.ordering.unwrap_or(OrderingKind::Kbo) {
            OrderingKind::Kbo => OrderingSpec::kbo_default(sig),
            OrderingKind::Lpo => OrderingSpec::lpo_default(sig),
        };
        let names: Vec<&str> = self
            .precedence
            .iter()
            .flatten()
            .map(String::as_str)
            .collect();
        let mut ord = base
            .with_precedence(sig, &names)
            .map_err(|e| InputError::new(None, e.to_string()))?;
        for (name, w) in &self.weights {
            let f = sig.lookup(name).ok_or_else(|| {
                InputError::new(None, format!("weight given for unknown symbol `{name}`"))
            })?;
            ord.set_weight(f, *w);
        }
        ord.validate(sig)
            .map_err(|e| InputError::new(None, e.to_string()))?;
        Ok(ord)
    }

    /// Whether the file declares existential variables of its own.
    pub fn has_declared_existentials(&self) -> bool {
        !self.sig.existentials().is_empty()
    }
}

/// Variable scope with sorts filled in by inference.
#[derive(Default)]
struct Scope {
    vars: BTreeMap<String, (u32, Option<SortId>)>,
    /// Whether unknown nullary names become variables.
    open: bool,
}

impl Scope {
    fn open() -> Scope {
        Scope {
            vars: BTreeMap::new(),
            open: true,
        }
    }

    fn bind(&mut self, name: &str, sort: Option<SortId>) -> u32 {
        let id = self.vars.len() as u32;
        self.vars.insert(name.into(), (id, sort));
        id
    }
}

struct Elab<'a> {
    sig: &'a Signature,
}

impl Elab<'_> {
    fn sort(&self, name: &str, span: Span) -> Result<SortId, InputError> {
        self.sig
            .sort_by_name(name)
            .ok_or_else(|| InputError::at(span, format!("unknown sort `{name}`")))
    }

    /// Infers sorts of variables; returns the sort of `t` if known.
    fn infer(
        &self,
        t: &TermAst,
        expected: Option<SortId>,
        scope: &mut Scope,
        changed: &mut bool,
    ) -> Result<Option<SortId>, InputError> {
        if let Some(f) = self.sig.lookup(&t.name) {
            if scope.vars.contains_key(&t.name) {
                return Err(InputError::at(
                    t.span,
                    format!("variable `{}` shadows a declared symbol", t.name),
                ));
            }
            let d = self.sig.decl(f);
            if d.args.len() != t.args.len() {
                return Err(InputError::at(
                    t.span,
                    format!(
                        "`{}` expects {} argument(s), found {}",
                        t.name,
                        d.args.len(),
                        t.args.len()
                    ),
                ));
            }
            for (a, &s) in t.args.iter().zip(&d.args.clone()) {
                self.infer(a, Some(s), scope, changed)?;
            }
            if let Some(e) = expected {
                if e != d.result {
                    return Err(self.mismatch(t.span, e, d.result));
                }
            }
            return Ok(Some(d.result));
        }
        if self.sig.existential_index(&t.name).is_some() {
            return Err(InputError::at(
                t.span,
                format!(
                    "existential variable `{}` may only occur in a constraint",
                    t.name
                ),
            ));
        }
        if !t.args.is_empty() {
            return Err(InputError::at(
                t.span,
                format!("unknown function or predicate `{}`", t.name),
            ));
        }
        if !scope.vars.contains_key(&t.name) {
            if !scope.open {
                return Err(InputError::at(
                    t.span,
                    format!("unbound variable `{}`", t.name),
                ));
            }
            scope.bind(&t.name, None);
            *changed = true;
        }
        let entry = scope.vars.get_mut(&t.name).expect("bound");
        match (entry.1, expected) {
            (Some(s), Some(e)) if s != e => Err(self.mismatch(t.span, e, s)),
            (None, Some(e)) => {
                if e == PRED_SORT {
                    return Err(InputError::at(
                        t.span,
                        format!("variable `{}` used as an atom", t.name),
                    ));
                }
                entry.1 = Some(e);
                *changed = true;
                Ok(Some(e))
            }
            (s, _) => Ok(s),
        }
    }

    fn mismatch(&self, span: Span, expected: SortId, found: SortId) -> InputError {
        let name = |s| {
            if s == PRED_SORT {
                "a predicate atom".to_string()
            } else {
                format!("sort `{}`", self.sig.sort_name(s))
            }
        };
        InputError::at(
            span,
            format!("expected {}, found {}", name(expected), name(found)),
        )
    }

    fn infer_lit(
        &self,
        l: &LitAst,
        scope: &mut Scope,
        changed: &mut bool,
    ) -> Result<(), InputError> {
        match l {
            LitAst::Atom(t) => {
                match self.sig.lookup(&t.name) {
                    Some(f) if self.sig.is_predicate(f) => {}
                    Some(_) => {
                        return Err(InputError::at(
                            t.span,
                            format!("`{}` is a function, not a predicate", t.name),
                        ))
                    }
                    None if t.args.is_empty() && self.sig.existential_index(&t.name).is_none() => {
                        return Err(InputError::at(
                            t.span,
                            format!("variable `{}` used as an atom", t.name),
                        ))
                    }
                    None => {}
                }
                self.infer(t, Some(PRED_SORT), scope, changed)?;
            }
            LitAst::Eq(a, b) => {
                let sa = self.infer(a, None, scope, changed)?;
                let sb = self.infer(b, sa, scope, changed)?;
                if sa.is_none() && sb.is_some() {
                    self.infer(a, sb, scope, changed)?;
                }
                if sa == Some(PRED_SORT) || sb == Some(PRED_SORT) {
                    return Err(InputError::at(
                        a.span,
                        "predicate atoms cannot appear in equations",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Assigns the single user sort to variables inference left open.
    fn default_sorts(&self, scope: &mut Scope, span: Span) -> Result<(), InputError> {
        let user: Vec<SortId> = self.sig.user_sorts().collect();
        for (name, (_, s)) in scope.vars.iter_mut() {
            if s.is_none() {
                if user.len() == 1 {
                    *s = Some(user[0]);
                } else {
                    return Err(InputError::at(
                        span,
                        format!("cannot infer the sort of variable `{name}`"),
                    ));
                }
            }
        }
        Ok(())
    }

    fn build(&self, t: &TermAst, scope: &Scope) -> Term {
        match self.sig.lookup(&t.name) {
            Some(f) => Term::app(f, t.args.iter().map(|a| self.build(a, scope)).collect()),
            None => {
                let (id, s) = scope.vars[&t.name];
                Term::Var(Var::universal(id, s.expect("sort inferred")))
            }
        }
    }

    fn build_lit(&self, l: &LitAst, scope: &Scope) -> Equation {
        match l {
            LitAst::Atom(t) => Equation::atom(self.build(t, scope)),
            LitAst::Eq(a, b) => Equation::new(self.build(a, scope), self.build(b, scope)),
        }
    }

    fn clause(&self, c: &ClauseAst, span: Span) -> Result<RawClause, InputError> {
        let mut scope = Scope::open();
        let mut entries = Vec::new();
        for (name, _) in &c.constraint {
            let i = self.sig.existential_index(name).ok_or_else(|| {
                InputError::at(
                    span,
                    format!("`{name}` is not a declared existential variable"),
                )
            })?;
            if entries.contains(&i) {
                return Err(InputError::at(
                    span,
                    format!("existential variable `{name}` constrained twice"),
                ));
            }
            entries.push(i);
        }
        loop {
            let mut changed = false;
            for l in c.antecedent.iter().chain(&c.succedent) {
                self.infer_lit(l, &mut scope, &mut changed)?;
            }
            for ((_, t), &i) in c.constraint.iter().zip(&entries) {
                self.infer(
                    t,
                    Some(self.sig.existentials()[i].sort),
                    &mut scope,
                    &mut changed,
                )?;
            }
            if !changed {
                break;
            }
        }
        self.default_sorts(&mut scope, span)?;
        let clause = Clause::new(
            c.antecedent
                .iter()
                .map(|l| self.build_lit(l, &scope))
                .collect(),
            c.succedent
                .iter()
                .map(|l| self.build_lit(l, &scope))
                .collect(),
        );
        let constraint = c
            .constraint
            .iter()
            .zip(&entries)
            .map(|((_, t), &i)| (i, self.build(t, &scope)))
            .collect();
        Ok(RawClause {
            clause,
            constraint,
            span,
        })
    }

    fn infer_formula(
        &self,
        f: &FormulaAst,
        scope: &mut Scope,
        changed: &mut bool,
    ) -> Result<(), InputError> {
        match f {
            FormulaAst::Lit(l) => self.infer_lit(l, scope, changed),
            FormulaAst::Neq(a, b) => {
                self.infer_lit(&LitAst::Eq(a.clone(), b.clone()), scope, changed)
            }
            FormulaAst::Not(g) => self.infer_formula(g, scope, changed),
            FormulaAst::And(gs) | FormulaAst::Or(gs) => gs
                .iter()
                .try_for_each(|g| self.infer_formula(g, scope, changed)),
            FormulaAst::Implies(a, b) => {
                self.infer_formula(a, scope, changed)?;
                self.infer_formula(b, scope, changed)
            }
        }
    }

    fn formula(&self, f: &FormulaAst, scope: &Scope) -> Formula {
        match f {
            FormulaAst::Lit(l) => Formula::Lit(self.build_lit(l, scope), true),
            FormulaAst::Neq(a, b) => Formula::Lit(
                Equation::new(self.build(a, scope), self.build(b, scope)),
                false,
            ),
            FormulaAst::Not(g) => Formula::Not(Box::new(self.formula(g, scope))),
            FormulaAst::And(gs) => {
                Formula::And(gs.iter().map(|g| self.formula(g, scope)).collect())
            }
            FormulaAst::Or(gs) => Formula::Or(gs.iter().map(|g| self.formula(g, scope)).collect()),
            FormulaAst::Implies(a, b) => Formula::Implies(
                Box::new(self.formula(a, scope)),
                Box::new(self.formula(b, scope)),
            ),
        }
    }

    fn conjecture(
        &self,
        c: &super::syntax::ConjectureAst,
        span: Span,
    ) -> Result<Conjecture, InputError> {
        let mut seen_exists = false;
        for (q, _) in &c.prefix {
            match q {
                Quant::Exists => seen_exists = true,
                Quant::Forall if seen_exists => {
                    return Err(InputError::at(
                        span,
                        "conjecture must have a ∀*∃* quantifier prefix",
                    ));
                }
                Quant::Forall => {}
            }
        }
        let mut scope = Scope::default();
        let mut bound = Vec::new();
        for (q, vs) in &c.prefix {
            for v in vs {
                if self.sig.lookup(&v.name).is_some() {
                    return Err(InputError::at(
                        span,
                        format!("variable `{}` shadows a declared symbol", v.name),
                    ));
                }
                if scope.vars.contains_key(&v.name) {
                    return Err(InputError::at(
                        span,
                        format!("variable `{}` bound twice", v.name),
                    ));
                }
                if v.rename.is_some() && *q == Quant::Exists {
                    return Err(InputError::at(
                        span,
                        format!("only universal variables can be renamed, not `{}`", v.name),
                    ));
                }
                let sort = v.sort.as_deref().map(|s| self.sort(s, span)).transpose()?;
                scope.bind(&v.name, sort);
                bound.push((*q, v.clone()));
            }
        }
        loop {
            let mut changed = false;
            self.infer_formula(&c.matrix, &mut scope, &mut changed)?;
            if !changed {
                break;
            }
        }
        self.default_sorts(&mut scope, span)?;
        let matrix = self.formula(&c.matrix, &scope);
        let mut universals = Vec::new();
        let mut existentials = Vec::new();
        for (q, v) in bound {
            let (id, s) = scope.vars[&v.name];
            let b = BoundVar {
                name: v.name,
                var: Var::universal(id, s.expect("sort")),
                rename: v.rename,
            };
            match q {
                Quant::Forall => universals.push(b),
                Quant::Exists => existentials.push(b),
            }
        }
        Ok(Conjecture {
            universals,
            existentials,
            matrix,
            span,
        })
    }

    fn hint(
        &self,
        var: &str,
        lower: &TermAst,
        upper: &TermAst,
        sort: SortId,
        span: Span,
    ) -> Result<InductHint, InputError> {
        let mut scope = Scope::open();
        loop {
            let mut changed = false;
            self.infer(lower, Some(sort), &mut scope, &mut changed)?;
            self.infer(upper, Some(sort), &mut scope, &mut changed)?;
            if !changed {
                break;
            }
        }
        self.default_sorts(&mut scope, span)?;
        Ok(InductHint {
            var: var.into(),
            lower: self.build(lower, &scope),
            upper: self.build(upper, &scope),
            span,
        })
    }
}

/// Turns a parsed file into a problem: declarations first, then clauses,
/// the conjecture and directives.
pub fn elaborate(file: &ProblemFile) -> Result<Problem, InputError> {
    let mut sig = Signature::new();
    let mut problem_rest = (None, Vec::new(), None);
    for (item, span) in &file.items {
        let span = *span;
        match item {
            Item::Sort(name) => {
                sig.add_sort(name).map_err(term_err(span))?;
            }
            Item::Func { name, args, result } => {
                let e = Elab { sig: &sig };
                let args = args
                    .iter()
                    .map(|a| e.sort(a, span))
                    .collect::<Result<Vec<_>, _>>()?;
                let result = e.sort(result, span)?;
                sig.add_function(name, &args, result)
                    .map_err(term_err(span))?;
            }
            Item::Pred { name, args } => {
                let e = Elab { sig: &sig };
                let args = args
                    .iter()
                    .map(|a| e.sort(a, span))
                    .collect::<Result<Vec<_>, _>>()?;
                sig.add_predicate(name, &args).map_err(term_err(span))?;
            }
            Item::Existential { name, sort } => {
                let s = Elab { sig: &sig }.sort(sort, span)?;
                if sig.lookup(name).is_some() {
                    return Err(InputError::at(
                        span,
                        format!("`{name}` is already declared"),
                    ));
                }
                sig.add_existential(name, s).map_err(term_err(span))?;
            }
            Item::Precedence(names) => problem_rest.0 = Some(names.clone()),
            Item::Weight(name, w) => problem_rest.1.push((name.clone(), *w)),
            Item::Ordering(kind) => {
                problem_rest.2 = Some(match kind.as_str() {
                    "kbo" => OrderingKind::Kbo,
                    "lpo" => OrderingKind::Lpo,
                    other => {
                        return Err(InputError::at(
                            span,
                            format!("unknown ordering `{other}`; expected kbo or lpo"),
                        ))
                    }
                })
            }
            Item::Axiom(_) | Item::Conjecture(_) | Item::Induct { .. } => {}
        }
    }
    for s in sig.user_sorts().collect::<Vec<_>>() {
        if sig.constructors(s).next().is_none() {
            return Err(InputError::new(
                None,
                format!("sort `{}` has no ground terms", sig.sort_name(s)),
            ));
        }
    }
    let e = Elab { sig: &sig };
    let mut axioms = Vec::new();
    let mut conjecture: Option<Conjecture> = None;
    let mut hint_items = Vec::new();
    for (item, span) in &file.items {
        match item {
            Item::Axiom(c) => axioms.push(e.clause(c, *span)?),
            Item::Conjecture(c) => {
                if conjecture.is_some() {
                    return Err(InputError::at(*span, "only one conjecture is allowed"));
                }
                conjecture = Some(e.conjecture(c, *span)?);
            }
            Item::Induct { var, lower, upper } => hint_items.push((var, lower, upper, *span)),
            _ => {}
        }
    }
    let mut hints = Vec::new();
    for (var, lower, upper, span) in hint_items {
        let sort = sig
            .existential_index(var)
            .map(|i| sig.existentials()[i].sort)
            .or_else(|| {
                conjecture.as_ref().and_then(|c| {
                    c.universals
                        .iter()
                        .find(|b| &b.name == var || b.rename.as_deref() == Some(var.as_str()))
                        .map(|b| b.var.sort)
                })
            });
        let sort = sort.ok_or_else(|| {
            InputError::at(
                span,
                format!("`{var}` is neither a universal conjecture variable nor an existential"),
            )
        })?;
        hints.push(e.hint(var, lower, upper, sort, span)?);
    }
    let (precedence, weights, ordering) = problem_rest;
    Ok(Problem {
        sig,
        axioms,
        conjecture,
        precedence,
        weights,
        ordering,
        hints,
    })
}
