//! Clause normal form of problems.
//!
//! Under fixed-domain semantics the universal variables of the conjecture
//! become existential variables constrained by `v ≈ x`, and the negated
//! matrix is converted to clauses. First-order mode Skolemizes them instead.

use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::term::{Signature, Sym, Term, Var};

use super::elaborate::{Formula, InputError, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClausifyMode {
    FixedDomain,
    FirstOrder,
}

#[derive(Clone, Debug)]
pub struct Clausified {
    pub sig: Signature,
    pub axioms: Vec<ConstrainedClause>,
    /// Clauses of the negated conjecture.
    pub query: Vec<ConstrainedClause>,
    /// `(conjecture variable, existential name)` in existential order.
    pub conjecture_existentials: Vec<(String, String)>,
    /// `(conjecture variable, Skolem constant)` in first-order mode.
    pub skolems: Vec<(String, Sym)>,
}

impl Clausified {
    pub fn all_clauses(&self) -> Vec<ConstrainedClause> {
        self.axioms.iter().chain(&self.query).cloned().collect()
    }
}

#[derive(Clone, Debug)]
enum Nnf {
    Lit(Equation, bool),
    And(Vec<Nnf>),
    Or(Vec<Nnf>),
}

fn nnf(f: &Formula, positive: bool) -> Nnf {
    match f {
        Formula::Lit(e, b) => Nnf::Lit(e.clone(), *b == positive),
        Formula::Not(g) => nnf(g, !positive),
        Formula::And(gs) if positive => Nnf::And(gs.iter().map(|g| nnf(g, true)).collect()),
        Formula::And(gs) => Nnf::Or(gs.iter().map(|g| nnf(g, false)).collect()),
        Formula::Or(gs) if positive => Nnf::Or(gs.iter().map(|g| nnf(g, true)).collect()),
        Formula::Or(gs) => Nnf::And(gs.iter().map(|g| nnf(g, false)).collect()),
        Formula::Implies(a, b) if positive => Nnf::Or(vec![nnf(a, false), nnf(b, true)]),
        Formula::Implies(a, b) => Nnf::And(vec![nnf(a, true), nnf(b, false)]),
    }
}

fn cnf(n: &Nnf) -> Vec<Vec<(Equation, bool)>> {
    match n {
        Nnf::Lit(e, b) => vec![vec![(e.clone(), *b)]],
        Nnf::And(gs) => gs.iter().flat_map(cnf).collect(),
        Nnf::Or(gs) => {
            let mut acc = vec![Vec::new()];
            for g in gs {
                let part = cnf(g);
                acc = acc
                    .iter()
                    .flat_map(|a| part.iter().map(move |p| [a.clone(), p.clone()].concat()))
                    .collect();
            }
            acc
        }
    }
}

fn to_clause(lits: Vec<(Equation, bool)>) -> Clause {
    let (mut ante, mut succ) = (Vec::new(), Vec::new());
    for (e, b) in lits {
        let side = if b { &mut succ } else { &mut ante };
        if !side.contains(&e) {
            side.push(e);
        }
    }
    Clause::new(ante, succ)
}

/// Clauses of `¬f`, without tautologies.
pub fn negated_cnf(f: &Formula) -> Vec<Clause> {
    let mut out: Vec<Clause> = Vec::new();
    for lits in cnf(&nnf(f, false)) {
        let c = to_clause(lits);
        if !c.is_tautology() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Whether `f` in negation normal form has only positive literals.
pub fn is_positive(f: &Formula) -> bool {
    fn go(n: &Nnf) -> bool {
        match n {
            Nnf::Lit(_, b) => *b,
            Nnf::And(gs) | Nnf::Or(gs) => gs.iter().all(go),
        }
    }
    go(&nnf(f, true))
}

/// Whether `f` is a conjunction of positive literals.
pub fn is_positive_conjunction(f: &Formula) -> bool {
    match f {
        Formula::Lit(_, b) => *b,
        Formula::And(gs) => gs.iter().all(is_positive_conjunction),
        _ => false,
    }
}

fn default_existential_name(sig: &Signature, taken: &[String]) -> String {
    let free = |n: &str| {
        sig.lookup(n).is_none()
            && sig.existential_index(n).is_none()
            && !taken.iter().any(|t| t == n)
    };
    for n in ["u", "v", "w"] {
        if free(n) {
            return n.into();
        }
    }
    (1..)
        .map(|i| format!("u{i}"))
        .find(|n| free(n))
        .expect("unbounded")
}

/// Constraint with the explicit entries and fresh variables elsewhere.
fn fresh_entries(sig: &Signature, clause: &Clause, explicit: &[(usize, Term)]) -> Constraint {
    let mut next = clause.vars().iter().map(|v| v.id + 1).max().unwrap_or(0);
    for (_, t) in explicit {
        next = next.max(t.vars().iter().map(|v| v.id + 1).max().unwrap_or(0));
    }
    let mut c = Constraint::fresh(sig, next);
    for (i, t) in explicit {
        c.terms[*i] = t.clone();
    }
    c
}

fn constrained(
    sig: &Signature,
    constraint: Constraint,
    clause: Clause,
    span: Option<super::syntax::Span>,
) -> Result<ConstrainedClause, InputError> {
    ConstrainedClause::new(sig, constraint, clause)
        .map_err(|e| InputError::new(span, e.to_string()))
}

pub fn clausify(problem: &Problem, mode: ClausifyMode) -> Result<Clausified, InputError> {
    let mut sig = problem.sig.clone();
    let mut conjecture_existentials = Vec::new();
    let mut skolems = Vec::new();
    let mut query_raw: Vec<(Clause, Vec<(usize, Var)>)> = Vec::new();
    if mode == ClausifyMode::FirstOrder && problem.has_declared_existentials() {
        return Err(InputError::new(
            None,
            "first-order mode does not accept declared existential variables",
        ));
    }
    if let Some(conj) = &problem.conjecture {
        match mode {
            ClausifyMode::FixedDomain => {
                let mut links = Vec::new();
                let mut taken = Vec::new();
                for b in &conj.universals {
                    let name = match &b.rename {
                        Some(n) => {
                            if sig.lookup(n).is_some() || sig.existential_index(n).is_some() {
                                return Err(InputError::at(
                                    conj.span,
                                    format!("existential name `{n}` is already in use"),
                                ));
                            }
                            n.clone()
                        }
                        None => default_existential_name(&sig, &taken),
                    };
                    taken.push(name.clone());
                    sig.add_existential(&name, b.var.sort)
                        .map_err(|e| InputError::at(conj.span, e.to_string()))?;
                    links.push((sig.existentials().len() - 1, b.var));
                    conjecture_existentials.push((b.name.clone(), name));
                }
                for c in negated_cnf(&conj.matrix) {
                    query_raw.push((c, links.clone()));
                }
            }
            ClausifyMode::FirstOrder => {
                let mut map = Vec::new();
                for b in &conj.universals {
                    let mut name = format!("sk_{}", b.name);
                    while sig.lookup(&name).is_some() {
                        name.push('\'');
                    }
                    let f = sig
                        .add_function(&name, &[], b.var.sort)
                        .map_err(|e| InputError::at(conj.span, e.to_string()))?;
                    skolems.push((b.name.clone(), f));
                    map.push((b.var, Term::constant(f)));
                }
                for c in negated_cnf(&conj.matrix) {
                    let c = c.map_terms(&|t| {
                        t.map_vars(&mut |v| {
                            map.iter()
                                .find(|(x, _)| *x == v)
                                .map_or(Term::Var(v), |(_, s)| s.clone())
                        })
                    });
                    query_raw.push((c, Vec::new()));
                }
            }
        }
    }
    let axioms = problem
        .axioms
        .iter()
        .map(|raw| {
            constrained(
                &sig,
                fresh_entries(&sig, &raw.clause, &raw.constraint),
                raw.clause.clone(),
                Some(raw.span),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    let span = problem.conjecture.as_ref().map(|c| c.span);
    let mut query = Vec::new();
    for (clause, links) in query_raw {
        let explicit: Vec<(usize, Term)> = links.iter().map(|(i, v)| (*i, Term::Var(*v))).collect();
        let constraint = fresh_entries(&sig, &clause, &explicit);
        let cc = constrained(&sig, constraint, clause, span)?;
        if !query.contains(&cc) {
            query.push(cc);
        }
    }
    Ok(Clausified {
        sig,
        axioms,
        query,
        conjecture_existentials,
        skolems,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(c: &Clausified) -> Vec<String> {
        c.all_clauses()
            .iter()
            .map(|cc| cc.display(&c.sig).to_string())
            .collect()
    }

    #[test]
    fn fixed_domain_clausification() {
        let p = Problem::parse(
            "sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred G : nat, nat\n\
             axiom -> G(s(0), 0)\naxiom G(x, y) -> G(s(x), s(y))\nconjecture forall x. G(s(x), x)",
        )
        .unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        assert_eq!(
            c.conjecture_existentials,
            vec![("x".to_string(), "u".to_string())]
        );
        assert_eq!(
            show(&c),
            vec!["→ G(s(0),0)", "G(x,y) → G(s(x),s(y))", "G(s(x),x) → ∥ u≈x"]
        );
    }

    #[test]
    fn first_order_skolemizes() {
        let p = Problem::parse("sort nat\nfunc 0 : nat\nfunc s : nat -> nat\npred E : nat\nconjecture forall x. E(x) | E(s(x))").unwrap();
        let c = clausify(&p, ClausifyMode::FirstOrder).unwrap();
        assert!(c.sig.existentials().is_empty());
        assert_eq!(
            show(&c),
            ["E(sk_x) → ", "E(s(sk_x)) → "]
                .iter()
                .map(|s| s.trim_end().to_string())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn renamed_and_existential_variables() {
        let p = Problem::parse(
            "sort e\nsort p\nfunc a : e\nfunc q : p\npred G : e, p\npred R : e, p\n\
             conjecture forall x/v, y/u. exists z. G(y, x) => R(y, x) & G(y, z)",
        )
        .unwrap();
        let c = clausify(&p, ClausifyMode::FixedDomain).unwrap();
        let names: Vec<&str> = c
            .sig
            .existentials()
            .iter()
            .map(|e| e.name.as_str())
            .collect();
        assert_eq!(names, ["v", "u"]);
        assert_eq!(c.query.len(), 2);
        assert!(is_positive(&Formula::Lit(
            Equation::new(Term::constant(Sym(1)), Term::constant(Sym(1))),
            true
        )));
    }
}
