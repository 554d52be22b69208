//! Many-sorted terms, signatures, positions, substitutions and unification.
//!
//! The predicative sort is built in: it holds the constant `true` and one
//! function symbol `f_P` per declared predicate `P`, so an atom `P(t)` is the
//! equation `f_P(t) ≈ true`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SortId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sym(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    Universal,
    Existential,
}

/// A variable carries its sort. Existential variables index into the
/// signature's list of existentials; universal ids are arbitrary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub kind: VarKind,
    pub id: u32,
    pub sort: SortId,
}

impl Var {
    pub fn universal(id: u32, sort: SortId) -> Var {
        Var {
            kind: VarKind::Universal,
            id,
            sort,
        }
    }

    pub fn is_existential(&self) -> bool {
        self.kind == VarKind::Existential
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Term {
    Var(Var),
    App(Sym, Vec<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymbolKind {
    Function,
    /// A function whose ground applications all reduce to constructor terms.
    Defined,
    Predicate,
    True,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuncDecl {
    pub name: String,
    pub args: Vec<SortId>,
    pub result: SortId,
    pub kind: SymbolKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistentialDecl {
    pub name: String,
    pub sort: SortId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("duplicate declaration of `{0}`")]
    Duplicate(String),
    #[error("unknown sort `{0}`")]
    UnknownSort(String),
    #[error("existential variable `{0}` may not be unified")]
    ExistentialVariable(String),
    #[error("ill-sorted: expected sort `{expected}`, found `{found}`")]
    IllSorted { expected: String, found: String },
    #[error("`{name}` expects {expected} arguments, got {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("position {0} does not exist")]
    InvalidPosition(Position),
    #[error("sort `{0}` has no ground terms")]
    EmptySort(String),
    #[error("the predicative sort may not be used here")]
    PredicativeSort,
}

/// The vocabulary of a problem together with its existential variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    sorts: Vec<String>,
    funcs: Vec<FuncDecl>,
    existentials: Vec<ExistentialDecl>,
    #[serde(skip)]
    names: HashMap<String, Sym>,
}

pub const PRED_SORT: SortId = SortId(0);
pub const TRUE_SYM: Sym = Sym(0);

impl Default for Signature {
    fn default() -> Self {
        Self::new()
    }
}

impl Signature {
    pub fn new() -> Signature {
        let mut sig = Signature {
            sorts: vec!["bool".into()],
            funcs: Vec::new(),
            existentials: Vec::new(),
            names: HashMap::new(),
        };
        sig.funcs.push(FuncDecl {
            name: "true".into(),
            args: Vec::new(),
            result: PRED_SORT,
            kind: SymbolKind::True,
        });
        sig.names.insert("true".into(), TRUE_SYM);
        sig
    }

    pub fn add_sort(&mut self, name: &str) -> Result<SortId, TermError> {
        if self.sorts.iter().any(|s| s == name) {
            return Err(TermError::Duplicate(name.into()));
        }
        self.sorts.push(name.into());
        Ok(SortId(self.sorts.len() as u32 - 1))
    }

    fn add_symbol(&mut self, decl: FuncDecl) -> Result<Sym, TermError> {
        if self.names.contains_key(&decl.name) {
            return Err(TermError::Duplicate(decl.name));
        }
        for s in decl.args.iter().chain(std::iter::once(&decl.result)) {
            if s.0 as usize >= self.sorts.len() {
                return Err(TermError::UnknownSort(format!("#{}", s.0)));
            }
        }
        let sym = Sym(self.funcs.len() as u32);
        self.names.insert(decl.name.clone(), sym);
        self.funcs.push(decl);
        Ok(sym)
    }

    pub fn add_function(
        &mut self,
        name: &str,
        args: &[SortId],
        result: SortId,
    ) -> Result<Sym, TermError> {
        if result == PRED_SORT || args.contains(&PRED_SORT) {
            return Err(TermError::PredicativeSort);
        }
        self.add_symbol(FuncDecl {
            name: name.into(),
            args: args.to_vec(),
            result,
            kind: SymbolKind::Function,
        })
    }

    pub fn add_predicate(&mut self, name: &str, args: &[SortId]) -> Result<Sym, TermError> {
        if args.contains(&PRED_SORT) {
            return Err(TermError::PredicativeSort);
        }
        self.add_symbol(FuncDecl {
            name: name.into(),
            args: args.to_vec(),
            result: PRED_SORT,
            kind: SymbolKind::Predicate,
        })
    }

    pub fn add_existential(&mut self, name: &str, sort: SortId) -> Result<Var, TermError> {
        if sort == PRED_SORT {
            return Err(TermError::PredicativeSort);
        }
        if self.existentials.iter().any(|e| e.name == name) {
            return Err(TermError::Duplicate(name.into()));
        }
        self.existentials.push(ExistentialDecl {
            name: name.into(),
            sort,
        });
        Ok(self.existential_var(self.existentials.len() - 1))
    }

    pub fn sorts(&self) -> impl Iterator<Item = SortId> + '_ {
        (0..self.sorts.len() as u32).map(SortId)
    }

    /// Sorts other than the predicative one.
    pub fn user_sorts(&self) -> impl Iterator<Item = SortId> + '_ {
        (1..self.sorts.len() as u32).map(SortId)
    }

    pub fn sort_name(&self, s: SortId) -> &str {
        &self.sorts[s.0 as usize]
    }

    pub fn sort_by_name(&self, name: &str) -> Option<SortId> {
        self.sorts
            .iter()
            .position(|s| s == name)
            .map(|i| SortId(i as u32))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.funcs.len() as u32).map(Sym)
    }

    pub fn num_symbols(&self) -> usize {
        self.funcs.len()
    }

    pub fn decl(&self, f: Sym) -> &FuncDecl {
        &self.funcs[f.0 as usize]
    }

    pub fn name(&self, f: Sym) -> &str {
        &self.funcs[f.0 as usize].name
    }

    pub fn lookup(&self, name: &str) -> Option<Sym> {
        if self.names.len() != self.funcs.len() {
            return self
                .funcs
                .iter()
                .position(|d| d.name == name)
                .map(|i| Sym(i as u32));
        }
        self.names.get(name).copied()
    }

    pub fn is_predicate(&self, f: Sym) -> bool {
        self.decl(f).kind == SymbolKind::Predicate
    }

    pub fn is_defined(&self, f: Sym) -> bool {
        self.decl(f).kind == SymbolKind::Defined
    }

    /// Marks a function symbol as defined, removing it from the constructors.
    pub fn mark_defined(&mut self, f: Sym) {
        let d = &mut self.funcs[f.0 as usize];
        if d.kind == SymbolKind::Function {
            d.kind = SymbolKind::Defined;
        }
    }

    /// Non-defined symbols whose result sort is `sort`. Ground terms built
    /// from these make up the domain that existential variables range over.
    pub fn constructors(&self, sort: SortId) -> impl Iterator<Item = Sym> + '_ {
        self.symbols()
            .filter(move |&f| self.decl(f).result == sort && !self.is_defined(f))
    }

    /// A copy of the signature whose existential variables have the given sorts.
    pub fn with_existential_sorts(&self, sorts: &[SortId]) -> Signature {
        let mut sig = self.clone();
        sig.existentials = sorts
            .iter()
            .enumerate()
            .map(|(i, &sort)| ExistentialDecl {
                name: format!("_e{i}"),
                sort,
            })
            .collect();
        sig
    }

    pub fn existentials(&self) -> &[ExistentialDecl] {
        &self.existentials
    }

    pub fn existential_var(&self, i: usize) -> Var {
        Var {
            kind: VarKind::Existential,
            id: i as u32,
            sort: self.existentials[i].sort,
        }
    }

    pub fn existential_index(&self, name: &str) -> Option<usize> {
        self.existentials.iter().position(|e| e.name == name)
    }

    pub fn sort_of(&self, t: &Term) -> SortId {
        match t {
            Term::Var(v) => v.sort,
            Term::App(f, _) => self.decl(*f).result,
        }
    }

    /// Checks arities and argument sorts, returning the sort of `t`.
    pub fn check_term(&self, t: &Term) -> Result<SortId, TermError> {
        match t {
            Term::Var(v) => Ok(v.sort),
            Term::App(f, args) => {
                let d = self.decl(*f);
                if d.args.len() != args.len() {
                    return Err(TermError::Arity {
                        name: d.name.clone(),
                        expected: d.args.len(),
                        found: args.len(),
                    });
                }
                for (a, &s) in args.iter().zip(&d.args) {
                    let found = self.check_term(a)?;
                    if found != s {
                        return Err(TermError::IllSorted {
                            expected: self.sort_name(s).into(),
                            found: self.sort_name(found).into(),
                        });
                    }
                }
                Ok(d.result)
            }
        }
    }

    /// Every user sort must contain a ground term.
    pub fn validate(&self) -> Result<(), TermError> {
        let inhabited = self.inhabited_sorts();
        for s in self.user_sorts() {
            if !inhabited.contains(&s) {
                return Err(TermError::EmptySort(self.sort_name(s).into()));
            }
        }
        Ok(())
    }

    fn inhabited_sorts(&self) -> BTreeSet<SortId> {
        let mut inhabited = BTreeSet::new();
        loop {
            let before = inhabited.len();
            for d in &self.funcs {
                if d.args.iter().all(|a| inhabited.contains(a)) {
                    inhabited.insert(d.result);
                }
            }
            if inhabited.len() == before {
                return inhabited;
            }
        }
    }

    /// A sort is finite when it has only finitely many ground constructor terms.
    pub fn is_finite_sort(&self, sort: SortId) -> bool {
        // Some ground term deeper than the number of sorts exists iff a sort
        // repeats along a path, which can then be pumped.
        let n = self.sorts.len();
        let inhabited = self.inhabited_sorts();
        let mut reach: BTreeSet<SortId> = inhabited.iter().copied().collect();
        for _ in 0..=n {
            let mut next = BTreeSet::new();
            for d in self.funcs.iter().filter(|d| d.kind != SymbolKind::Defined) {
                if d.args.is_empty() || !d.args.iter().all(|a| inhabited.contains(a)) {
                    continue;
                }
                if d.args.iter().any(|a| reach.contains(a)) {
                    next.insert(d.result);
                }
            }
            reach = next;
        }
        !reach.contains(&sort)
    }

    /// Predicative atom `P(args)` as the term `f_P(args)`.
    pub fn atom(&self, pred: Sym, args: Vec<Term>) -> Term {
        Term::App(pred, args)
    }

    pub fn true_term(&self) -> Term {
        Term::App(TRUE_SYM, Vec::new())
    }

    pub fn term<'a>(&'a self, t: &'a Term) -> TermDisplay<'a> {
        TermDisplay { sig: self, term: t }
    }

    pub fn rebuild_index(&mut self) {
        self.names = self
            .funcs
            .iter()
            .enumerate()
            .map(|(i, d)| (d.name.clone(), Sym(i as u32)))
            .collect();
    }
}

/// Display name of a universal variable.
pub fn universal_name(id: u32) -> String {
    const BASE: [&str; 4] = ["x", "y", "z", "w"];
    if (id as usize) < BASE.len() {
        BASE[id as usize].to_string()
    } else {
        format!("x{id}")
    }
}

pub struct TermDisplay<'a> {
    sig: &'a Signature,
    term: &'a Term,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Var(v) => match v.kind {
                VarKind::Universal => write!(f, "{}", universal_name(v.id)),
                VarKind::Existential => match self.sig.existentials.get(v.id as usize) {
                    Some(e) => write!(f, "{}", e.name),
                    None => write!(f, "?v{}", v.id),
                },
            },
            Term::App(g, args) => {
                write!(f, "{}", self.sig.name(*g))?;
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", self.sig.term(a))?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// A 1-based path into a term; the root is the empty path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position(pub Vec<usize>);

impl Position {
    pub fn root() -> Position {
        Position(Vec::new())
    }

    pub fn child(&self, i: usize) -> Position {
        let mut p = self.0.clone();
        p.push(i);
        Position(p)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl Term {
    pub fn var(v: Var) -> Term {
        Term::Var(v)
    }

    pub fn constant(f: Sym) -> Term {
        Term::App(f, Vec::new())
    }

    pub fn app(f: Sym, args: Vec<Term>) -> Term {
        Term::App(f, args)
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn as_var(&self) -> Option<Var> {
        match self {
            Term::Var(v) => Some(*v),
            Term::App(..) => None,
        }
    }

    pub fn head(&self) -> Option<Sym> {
        match self {
            Term::Var(_) => None,
            Term::App(f, _) => Some(*f),
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Var(_) => &[],
            Term::App(_, a) => a,
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Number of symbol and variable occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        match self {
            Term::Var(v) => f(*v),
            Term::App(_, args) => args.iter().for_each(|a| a.for_each_var(f)),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.for_each_var(&mut |v| {
            out.insert(v);
        });
        out
    }

    /// Variables in order of first occurrence.
    pub fn vars_in_order(&self, out: &mut Vec<Var>) {
        self.for_each_var(&mut |v| {
            if !out.contains(&v) {
                out.push(v);
            }
        });
    }

    pub fn contains_var(&self, x: Var) -> bool {
        match self {
            Term::Var(v) => *v == x,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(x)),
        }
    }

    pub fn has_existential(&self) -> bool {
        match self {
            Term::Var(v) => v.is_existential(),
            Term::App(_, args) => args.iter().any(Term::has_existential),
        }
    }

    pub fn contains_symbol(&self, f: Sym) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(g, args) => *g == f || args.iter().any(|a| a.contains_symbol(f)),
        }
    }

    pub fn max_universal_id(&self) -> Option<u32> {
        let mut m = None;
        self.for_each_var(&mut |v| {
            if v.kind == VarKind::Universal {
                m = Some(m.map_or(v.id, |c: u32| c.max(v.id)));
            }
        });
        m
    }

    pub fn at(&self, p: &Position) -> Option<&Term> {
        let mut t = self;
        for &i in &p.0 {
            t = t.args().get(i.checked_sub(1)?)?;
        }
        Some(t)
    }

    pub fn subterm_at(&self, p: &Position) -> Result<&Term, TermError> {
        self.at(p)
            .ok_or_else(|| TermError::InvalidPosition(p.clone()))
    }

    pub fn replace_at(&self, p: &Position, r: &Term) -> Result<Term, TermError> {
        fn go(t: &Term, path: &[usize], r: &Term) -> Option<Term> {
            match path.split_first() {
                None => Some(r.clone()),
                Some((&i, rest)) => match t {
                    Term::App(f, args) if i >= 1 && i <= args.len() => {
                        let mut args = args.clone();
                        args[i - 1] = go(&args[i - 1], rest, r)?;
                        Some(Term::App(*f, args))
                    }
                    _ => None,
                },
            }
        }
        go(self, &p.0, r).ok_or_else(|| TermError::InvalidPosition(p.clone()))
    }

    /// All positions in pre-order.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        fn go(t: &Term, cur: &mut Vec<usize>, out: &mut Vec<Position>) {
            out.push(Position(cur.clone()));
            for (i, a) in t.args().iter().enumerate() {
                cur.push(i + 1);
                go(a, cur, out);
                cur.pop();
            }
        }
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Positions whose subterm is not a variable.
    pub fn nonvar_positions(&self) -> Vec<Position> {
        self.positions()
            .into_iter()
            .filter(|p| !self.at(p).is_some_and(Term::is_var))
            .collect()
    }

    /// Strict subterms, outermost first.
    pub fn strict_subterms(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
            for a in t.args() {
                out.push(a);
                go(a, out);
            }
        }
        go(self, &mut out);
        out
    }

    pub fn map_vars(&self, f: &mut impl FnMut(Var) -> Term) -> Term {
        match self {
            Term::Var(v) => f(*v),
            Term::App(g, args) => Term::App(*g, args.iter().map(|a| a.map_vars(f)).collect()),
        }
    }

    /// Shifts universal variable ids by `offset`.
    pub fn shift(&self, offset: u32) -> Term {
        self.map_vars(&mut |v| match v.kind {
            VarKind::Universal => Term::Var(Var {
                id: v.id + offset,
                ..v
            }),
            VarKind::Existential => Term::Var(v),
        })
    }
}

/// A substitution with an explicit domain. Identity bindings are kept so that
/// two substitutions are equal exactly when domains and images agree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Substitution {
    map: BTreeMap<Var, Term>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Term)>) -> Substitution {
        Substitution {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, v: Var, t: Term) {
        self.map.insert(v, t);
    }

    pub fn get(&self, v: Var) -> Option<&Term> {
        self.map.get(&v)
    }

    pub fn domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.map.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, t: &Term) -> Term {
        if self.map.is_empty() {
            return t.clone();
        }
        t.map_vars(&mut |v| self.map.get(&v).cloned().unwrap_or(Term::Var(v)))
    }

    /// `self` followed by `other`: `t(self.then(other)) = (t self) other`.
    pub fn then(&self, other: &Substitution) -> Substitution {
        let mut map: BTreeMap<Var, Term> =
            self.map.iter().map(|(v, t)| (*v, other.apply(t))).collect();
        for (v, t) in &other.map {
            map.entry(*v).or_insert_with(|| t.clone());
        }
        Substitution { map }
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.values().all(|t| self.apply(t) == *t)
    }

    /// Non-identity bindings only.
    pub fn restricted(&self) -> Substitution {
        Substitution {
            map: self
                .map
                .iter()
                .filter(|(v, t)| **t != Term::Var(**v))
                .map(|(v, t)| (*v, t.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> SubstDisplay<'a> {
        SubstDisplay { sig, subst: self }
    }
}

pub struct SubstDisplay<'a> {
    sig: &'a Signature,
    subst: &'a Substitution,
}

impl fmt::Display for SubstDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, t)) in self.subst.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{} ↦ {}",
                self.sig.term(&Term::Var(*v)),
                self.sig.term(t)
            )?;
        }
        write!(f, "}}")
    }
}

/// Triangular binding store used by unification.
#[derive(Clone, Debug, Default)]
pub(crate) struct Bindings {
    map: HashMap<Var, Term>,
}

impl Bindings {
    fn walk<'a>(&'a self, mut t: &'a Term) -> &'a Term {
        while let Term::Var(v) = t {
            match self.map.get(v) {
                Some(b) => t = b,
                None => break,
            }
        }
        t
    }

    fn occurs(&self, x: Var, t: &Term) -> bool {
        match self.walk(t) {
            Term::Var(v) => *v == x,
            Term::App(_, args) => args.iter().any(|a| self.occurs(x, a)),
        }
    }

    /// Unifies two terms of the same sort.
    pub(crate) fn unify(&mut self, a: &Term, b: &Term) -> bool {
        // Only bound variables are cloned; input terms are traversed in place.
        if let Some(t) = a.as_var().and_then(|v| self.map.get(&v)) {
            let t = t.clone();
            return self.unify(&t, b);
        }
        if let Some(t) = b.as_var().and_then(|v| self.map.get(&v)) {
            let t = t.clone();
            return self.unify(a, &t);
        }
        match (a, b) {
            (Term::Var(x), Term::Var(y)) if x == y => true,
            (Term::Var(x), t) | (t, Term::Var(x)) => {
                if self.occurs(*x, t) {
                    return false;
                }
                self.map.insert(*x, t.clone());
                true
            }
            (Term::App(f, fa), Term::App(g, ga)) => {
                f == g && fa.len() == ga.len() && fa.iter().zip(ga).all(|(x, y)| self.unify(x, y))
            }
        }
    }

    pub(crate) fn resolve(&self, t: &Term) -> Term {
        match self.walk(t) {
            Term::Var(v) => Term::Var(*v),
            Term::App(f, args) => Term::App(*f, args.iter().map(|a| self.resolve(a)).collect()),
        }
    }

    /// Idempotent substitution whose domain is `vars`.
    pub(crate) fn to_substitution(&self, vars: impl IntoIterator<Item = Var>) -> Substitution {
        Substitution::from_pairs(vars.into_iter().map(|v| (v, self.resolve(&Term::Var(v)))))
    }
}

/// Unifies a list of pairs; sorts must already agree pairwise.
pub(crate) fn unify_pairs<'a>(
    pairs: impl IntoIterator<Item = (&'a Term, &'a Term)>,
) -> Option<Bindings> {
    let mut b = Bindings::default();
    for (s, t) in pairs {
        if !b.unify(s, t) {
            return None;
        }
    }
    Some(b)
}

fn check_unifiable_input(sig: &Signature, s: &Term, t: &Term) -> Result<(), TermError> {
    for u in [s, t] {
        let mut bad = None;
        u.for_each_var(&mut |v| {
            if v.is_existential() && bad.is_none() {
                bad = Some(v);
            }
        });
        if let Some(v) = bad {
            return Err(TermError::ExistentialVariable(
                sig.term(&Term::Var(v)).to_string(),
            ));
        }
    }
    let (ss, ts) = (sig.check_term(s)?, sig.check_term(t)?);
    if ss != ts {
        return Err(TermError::IllSorted {
            expected: sig.sort_name(ss).into(),
            found: sig.sort_name(ts).into(),
        });
    }
    Ok(())
}

/// Most general unifier with occurs check; the domain is `vars(s) ∪ vars(t)`.
pub fn mgu(sig: &Signature, s: &Term, t: &Term) -> Result<Option<Substitution>, TermError> {
    simultaneous_mgu(sig, &[(s.clone(), t.clone())])
}

/// Most general simultaneous unifier of all pairs.
pub fn simultaneous_mgu(
    sig: &Signature,
    pairs: &[(Term, Term)],
) -> Result<Option<Substitution>, TermError> {
    let mut vars = BTreeSet::new();
    for (s, t) in pairs {
        check_unifiable_input(sig, s, t)?;
        vars.extend(s.vars());
        vars.extend(t.vars());
    }
    Ok(unify_pairs(pairs.iter().map(|(s, t)| (s, t))).map(|b| b.to_substitution(vars)))
}

/// One-way matching: extends `subst` so that `pattern·subst = target`.
/// Variables of `target` are treated as constants.
pub fn match_into(pattern: &Term, target: &Term, subst: &mut BTreeMap<Var, Term>) -> bool {
    match pattern {
        Term::Var(v) => match subst.get(v) {
            Some(b) => b == target,
            None => {
                subst.insert(*v, target.clone());
                true
            }
        },
        Term::App(f, pa) => match target {
            Term::App(g, ta) if f == g && pa.len() == ta.len() => {
                pa.iter().zip(ta).all(|(p, t)| match_into(p, t, subst))
            }
            _ => false,
        },
    }
}

/// Like [`match_into`] but binds variables to borrowed subterms.
pub(crate) fn match_ref<'a>(
    pattern: &Term,
    target: &'a Term,
    subst: &mut BTreeMap<Var, &'a Term>,
) -> bool {
    match pattern {
        Term::Var(v) => match subst.get(v) {
            Some(b) => *b == target,
            None => {
                subst.insert(*v, target);
                true
            }
        },
        Term::App(f, pa) => match target {
            Term::App(g, ta) if f == g && pa.len() == ta.len() => {
                pa.iter().zip(ta).all(|(p, t)| match_ref(p, t, subst))
            }
            _ => false,
        },
    }
}

pub fn matches(pattern: &Term, target: &Term) -> Option<Substitution> {
    let mut m = BTreeMap::new();
    match_into(pattern, target, &mut m).then_some(Substitution { map: m })
}
