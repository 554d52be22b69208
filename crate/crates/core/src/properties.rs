//! Property tests for the core invariants.

use proptest::prelude::*;

use crate::clause::{Clause, ConstrainedClause, Constraint, Equation};
use crate::coverage::{brute_force_covering, is_covering, minimal_uncovered};
use crate::frontend::run::{run_text, Config, Mode, VerdictKind};
use crate::frontend::syntax::parse_problem;
use crate::ordering::{Comparison, Occurrence, OrderingSpec};
use crate::term::{mgu, Signature, Substitution, Term, Var};

fn corpus(name: &str) -> String {
    let path = format!("{}/../../problems/{name}.sfd", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

const CORPUS: &[&str] = &[
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

/// `d` with constants a, b, unary g and binary f, plus a nat-like sort.
fn signature() -> Signature {
    let mut sig = Signature::new();
    let d = sig.add_sort("d").unwrap();
    sig.add_function("a", &[], d).unwrap();
    sig.add_function("b", &[], d).unwrap();
    sig.add_function("g", &[d], d).unwrap();
    sig.add_function("f", &[d, d], d).unwrap();
    sig
}

fn term_strategy(ground: bool) -> impl Strategy<Value = Term> {
    let sig = signature();
    let d = sig.sort_by_name("d").unwrap();
    let [a, b, g, f] = ["a", "b", "g", "f"].map(|n| sig.lookup(n).unwrap());
    let leaf = if ground {
        prop_oneof![Just(Term::constant(a)), Just(Term::constant(b))].boxed()
    } else {
        prop_oneof![
            Just(Term::constant(a)),
            Just(Term::constant(b)),
            (0u32..3).prop_map(move |i| Term::Var(Var::universal(i, d)))
        ]
        .boxed()
    };
    leaf.prop_recursive(3, 16, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(move |t| Term::app(g, vec![t])),
            (inner.clone(), inner).prop_map(move |(x, y)| Term::app(f, vec![x, y])),
        ]
    })
}

fn orderings() -> Vec<OrderingSpec> {
    let sig = signature();
    vec![
        OrderingSpec::kbo_default(&sig),
        OrderingSpec::lpo_default(&sig),
    ]
}

fn ground_substitution() -> impl Strategy<Value = Substitution> {
    let d = signature().sort_by_name("d").unwrap();
    prop::collection::vec(term_strategy(true), 3)
        .prop_map(move |ts| Substitution::from_pairs((0..3).map(|i| Var::universal(i, d)).zip(ts)))
}

proptest! {
    #[test]
    fn ordering_is_a_strict_order(s in term_strategy(false), t in term_strategy(false), r in term_strategy(false)) {
        for ord in orderings() {
            prop_assert_eq!(ord.compare(&s, &s), Comparison::Equal);
            prop_assert_eq!(ord.compare(&s, &t), ord.compare(&t, &s).flip());
            if ord.greater(&s, &t) && ord.greater(&t, &r) {
                prop_assert!(ord.greater(&s, &r));
            }
        }
    }

    #[test]
    fn ordering_has_the_subterm_property(s in term_strategy(false)) {
        for ord in orderings() {
            for p in s.positions().iter().filter(|p| !p.0.is_empty()) {
                prop_assert!(ord.greater(&s, s.at(p).unwrap()));
            }
        }
    }

    #[test]
    fn ordering_is_stable_and_ground_total(s in term_strategy(false), t in term_strategy(false), sigma in ground_substitution()) {
        for ord in orderings() {
            let (gs, gt) = (sigma.apply(&s), sigma.apply(&t));
            if ord.greater(&s, &t) {
                prop_assert!(ord.greater(&gs, &gt));
            }
            let c = ord.compare(&gs, &gt);
            prop_assert_ne!(c, Comparison::Incomparable);
            prop_assert_eq!(c == Comparison::Equal, gs == gt);
        }
    }

    #[test]
    fn antecedent_occurrence_beats_succedent(s in term_strategy(false), t in term_strategy(false)) {
        let e = Equation::new(s, t);
        for ord in orderings() {
            prop_assert_eq!(ord.compare_occurrences(&Occurrence::Antecedent(&e), &Occurrence::Succedent(&e)), Comparison::Greater);
        }
    }

    #[test]
    fn mgu_unifies_and_is_idempotent(s in term_strategy(false), t in term_strategy(false)) {
        let sig = signature();
        if let Some(sigma) = mgu(&sig, &s, &t).unwrap() {
            let (us, ut) = (sigma.apply(&s), sigma.apply(&t));
            prop_assert_eq!(&us, &ut);
            prop_assert_eq!(sigma.apply(&us), us);
        }
    }

    #[test]
    fn mgu_is_most_general(s in term_strategy(false), t in term_strategy(false), sigma in ground_substitution()) {
        // Any ground unifier is an instance of the mgu.
        let sig = signature();
        if sigma.apply(&s) == sigma.apply(&t) {
            let m = mgu(&sig, &s, &t).unwrap();
            prop_assert!(m.is_some());
            let m = m.unwrap();
            let via = |x: &Term| sigma.apply(&m.apply(x));
            prop_assert_eq!(via(&s), sigma.apply(&s));
        }
    }

    #[test]
    fn canonical_form_ignores_variable_names(
        c in term_strategy(false),
        l in term_strategy(false),
        r in term_strategy(false),
        shift in 3u32..20,
    ) {
        let d = signature().sort_by_name("d").unwrap();
        let rename = Substitution::from_pairs((0..3).map(|i| (Var::universal(i, d), Term::Var(Var::universal(2 - i + shift, d)))));
        let clause = Clause::new(vec![Equation::new(l, r.clone())], vec![Equation::new(r, c.clone())]);
        let one = ConstrainedClause::canonical(Constraint::new(vec![c]), clause);
        let two = ConstrainedClause::canonical(one.constraint().apply(&rename), one.clause().apply(&rename));
        prop_assert_eq!(one, two);
    }

    #[test]
    fn coverage_agrees_with_enumeration(
        raw in prop::collection::vec((0usize..4, 0usize..4), 1..5),
    ) {
        // Patterns over nat with two existential variables; shapes are
        // 0, s(0), x, s(x) for entry codes 0..4 and share x for non-linearity.
        let mut sig = Signature::new();
        let nat = sig.add_sort("nat").unwrap();
        let zero = sig.add_function("0", &[], nat).unwrap();
        let s = sig.add_function("s", &[nat], nat).unwrap();
        sig.add_existential("u", nat).unwrap();
        sig.add_existential("v", nat).unwrap();
        let ord = OrderingSpec::kbo_default(&sig);
        let x = Term::Var(Var::universal(0, nat));
        let shape = |k: usize| match k {
            0 => Term::constant(zero),
            1 => Term::app(s, vec![Term::constant(zero)]),
            2 => x.clone(),
            _ => Term::app(s, vec![x.clone()]),
        };
        let patterns: Vec<Constraint> = raw.iter().map(|&(i, j)| Constraint::new(vec![shape(i), shape(j)])).collect();
        let cov = is_covering(&sig, &ord, &patterns).unwrap();
        let min = minimal_uncovered(&sig, &ord, &patterns, None).unwrap();
        prop_assert_eq!(cov, min.is_none());
        prop_assert_eq!(min, brute_force_covering(&sig, &ord, &patterns, 6, None));
    }
}

#[test]
fn corpus_round_trips_through_the_printer() {
    for name in CORPUS {
        let parsed = parse_problem(&corpus(name)).unwrap();
        let printed = parsed.to_string();
        let reparsed = parse_problem(&printed).unwrap_or_else(|e| panic!("{name}: {e}\n{printed}"));
        assert!(
            parsed.same_items(&reparsed),
            "{name} changed after printing:\n{printed}"
        );
    }
}

fn verdict(name: &str, config: &Config) -> VerdictKind {
    run_text(config, &corpus(name)).unwrap().report.verdict
}

#[test]
fn deletion_does_not_change_verdicts() {
    for name in CORPUS {
        for mode in [Mode::FixedDomain, Mode::Inductive] {
            let base = Config {
                mode,
                max_iterations: 30,
                model_bound: 3,
                ..Config::default()
            };
            let kept = Config {
                deletion: false,
                ..base.clone()
            };
            let (a, b) = (verdict(name, &base), verdict(name, &kept));
            if a != VerdictKind::GaveUp && b != VerdictKind::GaveUp {
                assert_eq!(a, b, "{name} in {mode:?}");
            }
        }
    }
}

#[test]
fn stronger_semantics_prove_no_less() {
    // A first-order theorem holds in every fixed domain, and a fixed-domain
    // theorem holds in the minimal model.
    for name in CORPUS {
        let run = |mode| {
            verdict(
                name,
                &Config {
                    mode,
                    max_iterations: 30,
                    model_bound: 3,
                    ..Config::default()
                },
            )
        };
        let fixed = run(Mode::FixedDomain);
        let inductive = run(Mode::Inductive);
        if let Ok(out) = run_text(
            &Config {
                mode: Mode::FirstOrder,
                max_iterations: 30,
                model_bound: 3,
                ..Config::default()
            },
            &corpus(name),
        ) {
            if out.report.verdict == VerdictKind::Theorem {
                assert_ne!(
                    fixed,
                    VerdictKind::NonTheorem,
                    "{name}: first-order theorem refuted in fixed-domain mode"
                );
            }
        }
        if fixed == VerdictKind::Theorem {
            assert_ne!(
                inductive,
                VerdictKind::NonTheorem,
                "{name}: fixed-domain theorem refuted in inductive mode"
            );
        }
    }
}
