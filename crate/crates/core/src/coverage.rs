//! Coverage of the existential variables by empty-clause constraints.
//!
//! The complement of a set of constraint patterns is computed by repeated
//! subtraction: a block (a tuple of terms with disequations) minus a pattern
//! is split by instantiating block variables with every constructor of their
//! sort until the pattern either misses the block or matches it, in which
//! case only the disequations forced by non-linear pattern variables remain.
//! The set is covering exactly when no satisfiable block is left.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clause::{ConstrainedClause, Constraint};
use crate::ground::{GroundError, GroundTable};
use crate::ordering::{Comparison, OrderingKind, OrderingSpec};
use crate::term::{unify_pairs, Signature, SortId, Sym, Term, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverageError {
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error("no uncovered constraint within the weight window {0}; minimality is not guaranteed beyond it")]
    Inconclusive(u64),
}

/// Ground instances of `tuple` satisfying every disequation `z ≉ s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub tuple: Vec<Term>,
    pub diseqs: Vec<(Var, Term)>,
}

/// A disjunction of blocks describing the uncovered ground constraints.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedForm {
    pub blocks: Vec<Block>,
}

const BLOCK_VAR_BASE: u32 = 1 << 20;

#[derive(Clone, Debug)]
struct Fresh(u32);

impl Fresh {
    fn var(&mut self, sort: SortId) -> Var {
        self.0 += 1;
        Var::universal(self.0, sort)
    }
}

fn apply_map(t: &Term, m: &BTreeMap<Var, Term>) -> Term {
    t.map_vars(&mut |v| m.get(&v).cloned().unwrap_or(Term::Var(v)))
}

/// Disequation `a ≉ b` as a disjunction of solved disequations. `None`
/// means trivially true, `Some([])` trivially false.
fn solve_diseq(a: &Term, b: &Term) -> Option<Vec<(Var, Term)>> {
    let bind = unify_pairs([(a, b)])?;
    let mut vars = a.vars();
    vars.extend(b.vars());
    let sub = bind.to_substitution(vars);
    Some(
        sub.restricted()
            .iter()
            .map(|(v, t)| (*v, t.clone()))
            .collect(),
    )
}

impl Block {
    fn vars(&self) -> BTreeSet<Var> {
        self.tuple.iter().flat_map(Term::vars).collect()
    }

    /// Instantiates and re-solves the disequations; may split or vanish.
    fn instantiate(&self, m: &BTreeMap<Var, Term>) -> Vec<Block> {
        let tuple: Vec<Term> = self.tuple.iter().map(|t| apply_map(t, m)).collect();
        let mut acc = vec![Vec::new()];
        for (z, s) in &self.diseqs {
            match solve_diseq(&apply_map(&Term::Var(*z), m), &apply_map(s, m)) {
                None => {}
                Some(options) => {
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for o in &options {
                            let mut p: Vec<(Var, Term)> = prefix.clone();
                            p.push(o.clone());
                            next.push(p);
                        }
                    }
                    acc = next;
                }
            }
        }
        acc.into_iter()
            .map(|mut diseqs| {
                diseqs.sort();
                diseqs.dedup();
                Block {
                    tuple: tuple.clone(),
                    diseqs,
                }
            })
            .collect()
    }

    /// Whether a ground tuple belongs to this block.
    pub fn contains(&self, ground: &[Term]) -> bool {
        let mut m = BTreeMap::new();
        if !self
            .tuple
            .iter()
            .zip(ground)
            .all(|(p, g)| crate::term::match_into(p, g, &mut m))
        {
            return false;
        }
        self.diseqs
            .iter()
            .all(|(z, s)| apply_map(&Term::Var(*z), &m) != apply_map(s, &m))
    }
}

fn explosion_var(tuple: &[Term], pattern: &[Term]) -> Option<Var> {
    fn go(t: &Term, p: &Term) -> Option<Var> {
        match (t, p) {
            (Term::Var(y), Term::App(..)) => Some(*y),
            (Term::App(f, ta), Term::App(g, pa)) if f == g => {
                ta.iter().zip(pa).find_map(|(a, b)| go(a, b))
            }
            _ => None,
        }
    }
    tuple.iter().zip(pattern).find_map(|(t, p)| go(t, p))
}

fn collect_matches<'a>(p: &Term, t: &'a Term, out: &mut BTreeMap<Var, Vec<&'a Term>>) {
    match p {
        Term::Var(x) => out.entry(*x).or_default().push(t),
        Term::App(_, pa) => {
            for (a, b) in pa.iter().zip(t.args()) {
                collect_matches(a, b, out);
            }
        }
    }
}

fn subtract(sig: &Signature, block: Block, pattern: &[Term], fresh: &mut Fresh) -> Vec<Block> {
    if unify_pairs(block.tuple.iter().zip(pattern)).is_none() {
        return vec![block];
    }
    if let Some(y) = explosion_var(&block.tuple, pattern) {
        let mut out = Vec::new();
        for f in sig.constructors(y.sort).collect::<Vec<_>>() {
            let args: Vec<Term> = sig
                .decl(f)
                .args
                .clone()
                .into_iter()
                .map(|s| Term::Var(fresh.var(s)))
                .collect();
            let m = BTreeMap::from([(y, Term::app(f, args))]);
            for b in block.instantiate(&m) {
                out.extend(subtract(sig, b, pattern, fresh));
            }
        }
        return out;
    }
    let mut groups = BTreeMap::new();
    for (p, t) in pattern.iter().zip(&block.tuple) {
        collect_matches(p, t, &mut groups);
    }
    let mut out = Vec::new();
    for terms in groups.values() {
        for other in &terms[1..] {
            if *other == terms[0] {
                continue;
            }
            match solve_diseq(terms[0], other) {
                None => return vec![block],
                Some(options) => {
                    for o in options {
                        let mut b = block.clone();
                        b.diseqs.push(o);
                        b.diseqs.sort();
                        b.diseqs.dedup();
                        out.push(b);
                    }
                }
            }
        }
    }
    out
}

/// Backtracking search for a ground solution of a block; finite sorts are
/// enumerated completely, infinite ones need only one candidate more than
/// there are disequations.
fn block_witness(
    sig: &Signature,
    table: &GroundTable,
    ord: &OrderingSpec,
    block: &Block,
) -> Option<BTreeMap<Var, Term>> {
    let vars: Vec<Var> = block.vars().into_iter().collect();
    let k = block.diseqs.len();
    let mut pools = Vec::new();
    for v in &vars {
        let mut pool = Vec::new();
        let finite = sig.is_finite_sort(v.sort);
        for w in 1..=table.bound() {
            for t in table.of_weight(v.sort, w) {
                if !finite && pool.len() > k {
                    break;
                }
                pool.push(t.clone());
            }
        }
        pool.sort_by(|a, b| ord.ground_cmp(a, b));
        pools.push(pool);
    }
    fn go(
        i: usize,
        vars: &[Var],
        pools: &[Vec<Term>],
        block: &Block,
        cur: &mut BTreeMap<Var, Term>,
    ) -> bool {
        let ok = block.diseqs.iter().all(|(z, s)| {
            let (a, b) = (apply_map(&Term::Var(*z), cur), apply_map(s, cur));
            !(a.is_ground() && b.is_ground() && a == b)
        });
        if !ok {
            return false;
        }
        if i == vars.len() {
            return true;
        }
        for t in &pools[i] {
            cur.insert(vars[i], t.clone());
            if go(i + 1, vars, pools, block, cur) {
                return true;
            }
        }
        cur.remove(&vars[i]);
        false
    }
    let mut cur = BTreeMap::new();
    go(0, &vars, &pools, block, &mut cur).then_some(cur)
}

fn witness_table(
    sig: &Signature,
    ord: &OrderingSpec,
    block: &Block,
) -> Result<GroundTable, GroundError> {
    // Enough weight for k+1 distinct terms of every sort plus the tuple shape.
    let base = block.tuple.iter().map(|t| ord.weight(t)).max().unwrap_or(1);
    let mut bound = 4 + base;
    loop {
        let table = GroundTable::constructor_terms(sig, ord, bound)?;
        let enough = block.vars().iter().all(|v| {
            sig.is_finite_sort(v.sort) || table.up_to(v.sort, bound).len() > block.diseqs.len()
        });
        if enough || bound > 64 {
            return Ok(table);
        }
        bound += 4;
    }
}

/// Solved form of the complement of `patterns`.
pub fn quantifier_elimination(
    sig: &Signature,
    ord: &OrderingSpec,
    patterns: &[Constraint],
) -> Result<SolvedForm, CoverageError> {
    let (live, mut fresh) = complement_blocks(sig, ord, patterns)?;
    Ok(SolvedForm {
        blocks: simplify(sig, live, patterns, &mut fresh),
    })
}

/// The satisfiable blocks of the complement, before simplification.
fn complement_blocks(
    sig: &Signature,
    ord: &OrderingSpec,
    patterns: &[Constraint],
) -> Result<(Vec<Block>, Fresh), CoverageError> {
    let mut c = Complement::new(sig);
    for p in patterns {
        c.subtract(sig, ord, p)?;
    }
    Ok((c.blocks, c.fresh))
}

/// The complement of a growing set of patterns, kept as satisfiable blocks
/// so that each new pattern costs one subtraction.
#[derive(Clone, Debug)]
pub struct Complement {
    blocks: Vec<Block>,
    fresh: Fresh,
}

impl Complement {
    /// The complement of the empty pattern set: every ground constraint.
    pub fn new(sig: &Signature) -> Complement {
        let mut fresh = Fresh(BLOCK_VAR_BASE);
        let start: Vec<Term> = sig
            .existentials()
            .iter()
            .map(|e| Term::Var(fresh.var(e.sort)))
            .collect();
        Complement {
            blocks: vec![Block {
                tuple: start,
                diseqs: Vec::new(),
            }],
            fresh,
        }
    }

    /// Removes the instances of `pattern` and drops blocks left without
    /// ground solutions.
    pub fn subtract(
        &mut self,
        sig: &Signature,
        ord: &OrderingSpec,
        pattern: &Constraint,
    ) -> Result<(), CoverageError> {
        let mut live = Vec::new();
        for b in std::mem::take(&mut self.blocks) {
            for part in subtract(sig, b, &pattern.terms, &mut self.fresh) {
                if part.diseqs.is_empty()
                    || block_witness(sig, &witness_table(sig, ord, &part)?, ord, &part).is_some()
                {
                    live.push(part);
                }
            }
        }
        self.blocks = live;
        Ok(())
    }

    /// Whether the subtracted patterns cover every ground constraint.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Generalizes disequation-free blocks where no pattern overlaps the result
/// and drops blocks contained in others.
fn simplify(
    sig: &Signature,
    blocks: Vec<Block>,
    patterns: &[Constraint],
    fresh: &mut Fresh,
) -> Vec<Block> {
    let overlaps = |tuple: &[Term]| {
        patterns
            .iter()
            .any(|p| unify_pairs(tuple.iter().zip(&p.terms)).is_some())
    };
    let mut out: Vec<Block> = Vec::new();
    for mut b in blocks {
        if b.diseqs.is_empty() {
            'generalize: loop {
                for i in 0..b.tuple.len() {
                    for pos in b.tuple[i].nonvar_positions() {
                        let sub = b.tuple[i].at(&pos).expect("position");
                        let v = fresh.var(sig.sort_of(sub));
                        let mut cand = b.tuple.clone();
                        cand[i] = cand[i].replace_at(&pos, &Term::Var(v)).expect("position");
                        if !overlaps(&cand) {
                            b.tuple = cand;
                            continue 'generalize;
                        }
                    }
                }
                break;
            }
        }
        out.push(b);
    }
    let mut kept: Vec<Block> = Vec::new();
    for (i, b) in out.iter().enumerate() {
        let subsumed = out.iter().enumerate().any(|(j, c)| {
            j != i
                && c.diseqs.is_empty()
                && instance_of(&b.tuple, &c.tuple)
                && (!instance_of(&c.tuple, &b.tuple) || j < i)
        });
        if !subsumed {
            kept.push(b.clone());
        }
    }
    kept
}

fn instance_of(t: &[Term], p: &[Term]) -> bool {
    let mut m = BTreeMap::new();
    p.iter()
        .zip(t)
        .all(|(a, b)| crate::term::match_into(a, b, &mut m))
}

/// Whether `patterns` cover every ground constraint.
pub fn is_covering(
    sig: &Signature,
    ord: &OrderingSpec,
    patterns: &[Constraint],
) -> Result<bool, CoverageError> {
    Ok(complement_blocks(sig, ord, patterns)?.0.is_empty())
}

/// Function symbols that are completely defined by the unconstrained positive
/// unit equations among `clauses`: every rule `f(p₁,…,pₙ) ≈ r` has `f(p̄) ≻ r`,
/// the patterns `p̄` contain no defined symbol, and together they match every
/// tuple of ground constructor terms. Ground terms then reduce to terms
/// without defined symbols, so existential variables need to range over
/// constructor terms only.
pub fn defined_symbols(
    sig: &Signature,
    ord: &OrderingSpec,
    clauses: &[ConstrainedClause],
) -> Result<BTreeSet<Sym>, CoverageError> {
    let mut rules: BTreeMap<Sym, Vec<Constraint>> = BTreeMap::new();
    for cc in clauses.iter().filter(|cc| cc.is_unconstrained()) {
        let c = cc.clause();
        if !c.antecedent.is_empty() || c.succedent.len() != 1 || c.succedent[0].is_predicative(sig)
        {
            continue;
        }
        for (l, r) in c.succedent[0].orientations() {
            if let Some(f) = l.head() {
                if ord.greater(l, r) {
                    rules
                        .entry(f)
                        .or_default()
                        .push(Constraint::new(l.args().to_vec()));
                }
            }
        }
    }
    let mut defined: BTreeSet<Sym> = rules.keys().copied().collect();
    loop {
        let mut tmp = sig.clone();
        defined.iter().for_each(|&f| tmp.mark_defined(f));
        let mut keep = BTreeSet::new();
        for &f in &defined {
            let pats = &rules[&f];
            if pats.iter().any(|p| {
                p.terms
                    .iter()
                    .any(|t| defined.iter().any(|&g| t.contains_symbol(g)))
            }) {
                continue;
            }
            let local = tmp.with_existential_sorts(&sig.decl(f).args);
            if is_covering(&local, ord, pats)? {
                keep.insert(f);
            }
        }
        if keep == defined {
            return Ok(defined);
        }
        defined = keep;
    }
}

/// Whether a ground constraint is an instance of one of the patterns.
pub fn is_covered(ground: &[Term], patterns: &[Constraint]) -> bool {
    patterns.iter().any(|p| instance_of(ground, &p.terms))
}

/// Order in which constraint entries are compared when breaking ties.
fn tiebreak_order(n: usize, tiebreak: Option<&[usize]>) -> Vec<usize> {
    let mut order: Vec<usize> = tiebreak
        .map(|t| t.iter().copied().filter(|&i| i < n).collect())
        .unwrap_or_default();
    for i in 0..n {
        if !order.contains(&i) {
            order.push(i);
        }
    }
    order
}

fn lex_cmp(ord: &OrderingSpec, order: &[usize], a: &[Term], b: &[Term]) -> std::cmp::Ordering {
    for &i in order {
        match ord.ground_cmp(&a[i], &b[i]) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

fn total_weight(ord: &OrderingSpec, t: &[Term]) -> u64 {
    t.iter().map(|x| ord.weight(x)).sum()
}

/// A minimal ground constraint not covered by `patterns`, or `None` when
/// they cover everything. Candidates are searched by increasing total
/// weight; among those of least weight the lexicographically least (by the
/// tie-break order of existential variables) is returned.
pub fn minimal_uncovered(
    sig: &Signature,
    ord: &OrderingSpec,
    patterns: &[Constraint],
    tiebreak: Option<&[usize]>,
) -> Result<Option<Constraint>, CoverageError> {
    let solved = quantifier_elimination(sig, ord, patterns)?;
    let n = sig.existentials().len();
    let mut window = 0;
    for b in &solved.blocks {
        let table = witness_table(sig, ord, b)?;
        let Some(m) = block_witness(sig, &table, ord, b) else {
            continue;
        };
        let ground: Vec<Term> = b.tuple.iter().map(|t| apply_map(t, &m)).collect();
        let w = total_weight(ord, &ground);
        window = if window == 0 { w } else { window.min(w) };
    }
    if solved.blocks.is_empty() {
        return Ok(None);
    }
    let order = tiebreak_order(n, tiebreak);
    let max_component = window.saturating_sub(n.saturating_sub(1) as u64).max(1);
    let table = GroundTable::constructor_terms(sig, ord, max_component)?;
    let sorts: Vec<SortId> = sig.existentials().iter().map(|e| e.sort).collect();
    let mut best: Option<Vec<Term>> = None;
    for w in (n as u64).max(1)..=window.max(1) {
        let mut cands = Vec::new();
        tuples_of_weight(&table, &sorts, w, &mut Vec::new(), &mut |t| {
            if !is_covered(t, patterns) {
                cands.push(t.to_vec());
            }
        });
        if n == 0 && !is_covered(&[], patterns) {
            cands.push(Vec::new());
        }
        if let Some(c) = cands.into_iter().min_by(|a, b| lex_cmp(ord, &order, a, b)) {
            if ord.kind == OrderingKind::Kbo {
                return Ok(Some(Constraint::new(c)));
            }
            best = Some(match best {
                Some(b) if pointwise_less(ord, &b, &c) || lex_cmp(ord, &order, &b, &c).is_le() => b,
                _ => c,
            });
        }
    }
    match best {
        Some(b) => Ok(Some(Constraint::new(b))),
        None => Err(CoverageError::Inconclusive(window)),
    }
}

fn pointwise_less(ord: &OrderingSpec, a: &[Term], b: &[Term]) -> bool {
    ord.compare_constraints(&Constraint::new(a.to_vec()), &Constraint::new(b.to_vec()))
        == Comparison::Less
}

fn tuples_of_weight(
    table: &GroundTable,
    sorts: &[SortId],
    w: u64,
    acc: &mut Vec<Term>,
    emit: &mut impl FnMut(&[Term]),
) {
    match sorts.split_first() {
        None => {
            if w == 0 && !acc.is_empty() {
                emit(acc);
            }
        }
        Some((&s, rest)) => {
            let min_rest = rest.len() as u64;
            for k in 1..=w.saturating_sub(min_rest) {
                for t in table.of_weight(s, k) {
                    acc.push(t.clone());
                    tuples_of_weight(table, rest, w - k, acc, emit);
                    acc.pop();
                }
            }
        }
    }
}

/// Independent check by exhaustive enumeration of all ground constraints
/// whose entries have weight at most `bound`. Returns the least uncovered
/// one by total weight and then the tie-break order, or `None` when every
/// enumerated constraint is covered.
pub fn brute_force_covering(
    sig: &Signature,
    ord: &OrderingSpec,
    patterns: &[Constraint],
    bound: u64,
    tiebreak: Option<&[usize]>,
) -> Option<Constraint> {
    fn terms(
        sig: &Signature,
        ord: &OrderingSpec,
        sort: SortId,
        depth: usize,
        bound: u64,
    ) -> Vec<Term> {
        if depth == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for f in sig.constructors(sort).collect::<Vec<_>>() {
            let mut partial: Vec<Vec<Term>> = vec![Vec::new()];
            for s in sig.decl(f).args.clone() {
                let sub = terms(sig, ord, s, depth - 1, bound);
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        sub.iter()
                            .map(move |t| [p.clone(), vec![t.clone()]].concat())
                    })
                    .collect();
            }
            out.extend(
                partial
                    .into_iter()
                    .map(|a| Term::app(f, a))
                    .filter(|t| ord.weight(t) <= bound),
            );
        }
        out
    }
    fn matches(p: &Term, t: &Term, m: &mut Vec<(Var, Term)>) -> bool {
        match p {
            Term::Var(x) => match m.iter().find(|(y, _)| y == x) {
                Some((_, b)) => b == t,
                None => {
                    m.push((*x, t.clone()));
                    true
                }
            },
            Term::App(f, pa) => match t {
                Term::App(g, ta) if f == g => pa.iter().zip(ta).all(|(a, b)| matches(a, b, m)),
                _ => false,
            },
        }
    }
    let n = sig.existentials().len();
    let pools: Vec<Vec<Term>> = sig
        .existentials()
        .iter()
        .map(|e| terms(sig, ord, e.sort, bound as usize, bound))
        .collect();
    let order = tiebreak_order(n, tiebreak);
    let mut best: Option<Vec<Term>> = None;
    let mut idx = vec![0usize; n];
    if pools.iter().any(Vec::is_empty) {
        return None;
    }
    loop {
        let tuple: Vec<Term> = (0..n).map(|i| pools[i][idx[i]].clone()).collect();
        let covered = patterns.iter().any(|p| {
            let mut m = Vec::new();
            p.terms
                .iter()
                .zip(&tuple)
                .all(|(a, b)| matches(a, b, &mut m))
        });
        if !covered {
            let better = match &best {
                None => true,
                Some(b) => {
                    let (wt, wb) = (total_weight(ord, &tuple), total_weight(ord, b));
                    wt < wb || (wt == wb && lex_cmp(ord, &order, &tuple, b).is_lt())
                }
            };
            if better {
                best = Some(tuple);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return best.map(Constraint::new);
            }
            idx[i] += 1;
            if idx[i] < pools[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

impl SolvedForm {
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether a ground constraint lies in the described set.
    pub fn contains(&self, ground: &[Term]) -> bool {
        self.blocks.iter().any(|b| b.contains(ground))
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> SolvedFormDisplay<'a> {
        SolvedFormDisplay { sig, form: self }
    }
}

pub struct SolvedFormDisplay<'a> {
    sig: &'a Signature,
    form: &'a SolvedForm,
}

impl fmt::Display for SolvedFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.blocks.is_empty() {
            return write!(f, "solutions: none");
        }
        let blocks: Vec<String> = self
            .form
            .blocks
            .iter()
            .map(|b| render_block(self.sig, b))
            .collect();
        write!(f, "solutions: {}", blocks.join("  |  "))
    }
}

/// Renames block variables to `x, y, z, …` in order of appearance.
fn render_block(sig: &Signature, b: &Block) -> String {
    let mut order = Vec::new();
    for t in &b.tuple {
        t.vars_in_order(&mut order);
    }
    let m: BTreeMap<Var, Term> = order
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, Term::Var(Var::universal(i as u32, v.sort))))
        .collect();
    let mut parts: Vec<String> = b
        .tuple
        .iter()
        .enumerate()
        .map(|(i, t)| {
            format!(
                "{}≈{}",
                sig.existentials()[i].name,
                sig.term(&apply_map(t, &m))
            )
        })
        .collect();
    for (z, s) in &b.diseqs {
        parts.push(format!(
            "{}≉{}",
            sig.term(&apply_map(&Term::Var(*z), &m)),
            sig.term(&apply_map(s, &m))
        ));
    }
    if parts.is_empty() {
        "ε".into()
    } else {
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::clausify::{clausify, ClausifyMode};
    use crate::frontend::Problem;

    /// Signature plus the constraints of the given empty clauses.
    fn load(decls: &str, patterns: &[&str]) -> (Signature, OrderingSpec, Vec<Constraint>) {
        let mut text = decls.to_string();
        for p in patterns {
            text.push_str(&format!("\naxiom [] || {p}"));
        }
        let p = Problem::parse(&text).unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        let ord = p.ordering_for(&c.sig).unwrap();
        let cs = c.axioms.iter().map(|a| a.constraint().clone()).collect();
        (c.sig, ord, cs)
    }

    const NAT1: &str = "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\nexistential u : nat";
    const NAT2: &str =
        "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\nexistential u : nat\nexistential v : nat";

    fn show(sig: &Signature, c: &Constraint) -> String {
        c.display(sig).to_string()
    }

    #[test]
    fn complement_of_a_single_pattern() {
        let (sig, ord, a) = load(NAT2, &["u = s(x), v = 0"]);
        let sf = quantifier_elimination(&sig, &ord, &a).unwrap();
        assert_eq!(
            sf.display(&sig).to_string(),
            "solutions: u≈0, v≈x  |  u≈x, v≈s(y)"
        );
        let terms = enumerate_all(&sig, &ord, 5);
        for x in &terms {
            for y in &terms {
                let expected = x.head() == sig.lookup("0") || y.head() == sig.lookup("s");
                assert_eq!(sf.contains(&[x.clone(), y.clone()]), expected);
            }
        }
    }

    fn enumerate_all(sig: &Signature, ord: &OrderingSpec, bound: u64) -> Vec<Term> {
        crate::ground::enumerate_ground(sig, ord, sig.existentials()[0].sort, bound).unwrap()
    }

    #[test]
    fn covering_sets() {
        let (sig, ord, a) = load(NAT1, &["u = 0", "u = s(x)"]);
        assert!(is_covering(&sig, &ord, &a).unwrap());
        assert_eq!(minimal_uncovered(&sig, &ord, &a, None).unwrap(), None);
        assert_eq!(brute_force_covering(&sig, &ord, &a, 4, None), None);
        let elevator = "sort person\nsort elevator\nfunc p : person\nfunc q : person\nfunc a : elevator\nfunc b : elevator\n\
                        existential u : person\nexistential v : elevator";
        let (sig, ord, a) = load(elevator, &["u = x, v = a", "u = x, v = b"]);
        assert!(is_covering(&sig, &ord, &a).unwrap());
        let (sig, ord, a) = load(elevator, &["u = x, v = a"]);
        assert!(!is_covering(&sig, &ord, &a).unwrap());
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, None).unwrap().unwrap()
            ),
            "u≈p, v≈b"
        );
    }

    #[test]
    fn even_numbers_miss_one() {
        let (sig, ord, a) = load(NAT1, &["u = 0", "u = s(s(z))"]);
        assert!(!is_covering(&sig, &ord, &a).unwrap());
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, None).unwrap().unwrap()
            ),
            "u≈s(0)"
        );
        assert_eq!(
            show(
                &sig,
                &brute_force_covering(&sig, &ord, &a, 4, None).unwrap()
            ),
            "u≈s(0)"
        );
    }

    #[test]
    fn empty_set_and_tie_breaks() {
        let (sig, ord, a) = load(NAT1, &[]);
        let sf = quantifier_elimination(&sig, &ord, &a).unwrap();
        assert_eq!(sf.blocks.len(), 1);
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, None).unwrap().unwrap()
            ),
            "u≈0"
        );
        let (sig, ord, a) = load(NAT2, &["u = 0, v = 0"]);
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, None).unwrap().unwrap()
            ),
            "u≈0, v≈s(0)"
        );
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, Some(&[1, 0]))
                    .unwrap()
                    .unwrap()
            ),
            "u≈s(0), v≈0"
        );
        assert_eq!(
            show(
                &sig,
                &brute_force_covering(&sig, &ord, &a, 3, Some(&[1, 0])).unwrap()
            ),
            "u≈s(0), v≈0"
        );
    }

    #[test]
    fn non_linear_patterns() {
        let (sig, ord, a) = load(NAT2, &["u = x, v = x"]);
        let sf = quantifier_elimination(&sig, &ord, &a).unwrap();
        let zero = Term::constant(sig.lookup("0").unwrap());
        assert!(!sf.contains(&[zero.clone(), zero]));
        assert_eq!(
            show(
                &sig,
                &minimal_uncovered(&sig, &ord, &a, None).unwrap().unwrap()
            ),
            "u≈0, v≈s(0)"
        );
        let (sig, ord, a) = load(
            NAT2,
            &["u = x, v = x", "u = 0, v = s(y)", "u = s(x), v = y"],
        );
        assert!(is_covering(&sig, &ord, &a).unwrap());
    }

    #[test]
    fn no_existentials() {
        let (sig, ord, a) = load("sort t\nfunc c : t", &[]);
        assert!(!is_covering(&sig, &ord, &a).unwrap());
        assert_eq!(
            minimal_uncovered(&sig, &ord, &a, None).unwrap(),
            Some(Constraint::new(vec![]))
        );
        let (sig, ord, a) = load("sort t\nfunc c : t", &[""]);
        assert!(is_covering(&sig, &ord, &a).unwrap());
    }
}
