//! Inputs shared by the benchmarks.

use sfd::clause::Constraint;
use sfd::term::{Signature, Sym, Term, Var};

/// Corpus problems timed end to end, with the mode they are run in.
pub const PROBLEMS: &[(&str, &str)] = &[
    ("elevator", "fixed-domain"),
    ("greater", "inductive"),
    ("addition", "inductive"),
    ("even", "inductive"),
    ("greater_alt_all", "fixed-domain"),
];

pub fn problem_text(name: &str) -> String {
    let path = format!("{}/../../problems/{name}.sfd", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Natural numbers with `existentials` existential variables.
pub fn nat(existentials: usize) -> (Signature, Sym, Sym) {
    let mut sig = Signature::new();
    let n = sig.add_sort("nat").unwrap();
    let zero = sig.add_function("0", &[], n).unwrap();
    let s = sig.add_function("s", &[n], n).unwrap();
    for i in 0..existentials {
        sig.add_existential(&format!("u{i}"), n).unwrap();
    }
    (sig, zero, s)
}

pub fn numeral(zero: Sym, s: Sym, n: usize) -> Term {
    (0..n).fold(Term::constant(zero), |t, _| Term::app(s, vec![t]))
}

/// The even numerals `0, s(s(0)), …` below `2n` and `s(s(…(x)))` above,
/// a pattern set that leaves the odd numerals uncovered.
pub fn even_patterns(sig: &Signature, zero: Sym, s: Sym, n: usize) -> Vec<Constraint> {
    let sort = sig.sort_by_name("nat").unwrap();
    let x = Term::Var(Var::universal(0, sort));
    let mut out: Vec<Constraint> = (0..n)
        .map(|k| Constraint::new(vec![numeral(zero, s, 2 * k)]))
        .collect();
    out.push(Constraint::new(vec![
        (0..2 * n).fold(x, |t, _| Term::app(s, vec![t]))
    ]));
    out
}
