//! Helpers shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;

use sfd::clause::ConstrainedClause;
use sfd::frontend::clausify::{clausify, ClausifyMode};
use sfd::frontend::syntax::{parse_term_ast, TermAst};
use sfd::frontend::Problem;
use sfd::ordering::OrderingSpec;
use sfd::term::{Signature, SortId, Term, Var};

pub fn corpus(name: &str) -> String {
    let path = format!("{}/../../problems/{name}.sfd", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub const CORPUS: &[&str] = &[
    "addition",
    "bigger_alpha",
    "elevator",
    "eqelim",
    "eqelim_consup",
    "even",
    "first_order",
    "greater",
    "greater_alt_all",
    "greater_alt_exists",
    "greater_exists",
    "greater_induct",
    "least_witness",
    "parity",
    "shared_witness",
];

pub struct Fixture {
    pub problem: Problem,
    pub sig: Signature,
    pub ord: OrderingSpec,
    pub axioms: Vec<ConstrainedClause>,
    pub query: Vec<ConstrainedClause>,
}

impl Fixture {
    pub fn all(&self) -> Vec<ConstrainedClause> {
        self.axioms.iter().chain(&self.query).cloned().collect()
    }

    pub fn term(&self, text: &str, vars: &[(&str, Var)]) -> Term {
        term(&self.sig, text, vars)
    }

    pub fn sort(&self, name: &str) -> SortId {
        self.sig.sort_by_name(name).unwrap()
    }
}

pub fn load(text: &str) -> Fixture {
    load_mode(text, ClausifyMode::FixedDomain)
}

pub fn load_mode(text: &str, mode: ClausifyMode) -> Fixture {
    let problem = Problem::parse(text).unwrap();
    let c = clausify(&problem, mode).unwrap();
    let ord = problem.ordering_for(&c.sig).unwrap();
    Fixture {
        problem,
        sig: c.sig,
        ord,
        axioms: c.axioms,
        query: c.query,
    }
}

/// Builds a term from its textual form; names in `vars` become variables.
pub fn term(sig: &Signature, text: &str, vars: &[(&str, Var)]) -> Term {
    fn build(sig: &Signature, a: &TermAst, vars: &[(&str, Var)]) -> Term {
        if let Some((_, v)) = vars.iter().find(|(n, _)| *n == a.name) {
            return Term::Var(*v);
        }
        let f = sig
            .lookup(&a.name)
            .unwrap_or_else(|| panic!("unknown symbol {}", a.name));
        Term::app(f, a.args.iter().map(|x| build(sig, x, vars)).collect())
    }
    build(sig, &parse_term_ast(text).unwrap(), vars)
}

/// A random term of `sort` with depth at most `depth`; leaves are drawn
/// from `vars` (of the right sort) or constants.
pub fn random_term(
    rng: &mut impl Rng,
    sig: &Signature,
    sort: SortId,
    depth: usize,
    vars: &[Var],
) -> Term {
    let own: Vec<Var> = vars.iter().copied().filter(|v| v.sort == sort).collect();
    let syms: Vec<_> = sig.constructors(sort).collect();
    let consts: Vec<_> = syms
        .iter()
        .copied()
        .filter(|&f| sig.decl(f).args.is_empty())
        .collect();
    let leaf = depth == 0 || rng.gen_bool(0.35);
    if leaf {
        if !own.is_empty() && (consts.is_empty() || rng.gen_bool(0.5)) {
            return Term::Var(own[rng.gen_range(0..own.len())]);
        }
        if !consts.is_empty() {
            return Term::constant(consts[rng.gen_range(0..consts.len())]);
        }
    }
    let f = syms[rng.gen_range(0..syms.len())];
    let args = sig.decl(f).args.clone();
    if depth == 0 && !args.is_empty() {
        // No constant and no variable of this sort: fall through to depth 1.
        return Term::app(
            f,
            args.iter()
                .map(|&s| random_term(rng, sig, s, 0, vars))
                .collect(),
        );
    }
    Term::app(
        f,
        args.iter()
            .map(|&s| random_term(rng, sig, s, depth.saturating_sub(1), vars))
            .collect(),
    )
}
