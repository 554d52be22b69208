//! Mode dispatch and reporting.

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::calculus::{CalculusVariant, Rule};
use crate::clause::Constraint;
use crate::coverage::SolvedForm;
use crate::induction::{InductionDirective, Justification};
use crate::model::ModelHandle;
use crate::ordering::{OrderingKind, OrderingSpec};
use crate::saturation::{InductionPolicy, Limit, Saturation, SaturationConfig, Status, Verdict};
use crate::term::Term;

use super::clausify::{clausify, is_positive_conjunction, Clausified, ClausifyMode};
use super::elaborate::{InputError, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    FirstOrder,
    FixedDomain,
    Inductive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Semantics {
    FirstOrder,
    FixedDomain,
    MinimalModel,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::FirstOrder => "first-order (⊨)",
            Semantics::FixedDomain => "fixed-domain (⊨_Σ)",
            Semantics::MinimalModel => "minimal-model (⊨_Ind)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub mode: Mode,
    pub calculus: CalculusVariant,
    /// `None` picks heuristic induction in inductive mode and none elsewhere.
    pub induction: Option<InductionPolicy>,
    pub max_iterations: usize,
    pub max_clauses: usize,
    pub timeout: Option<Duration>,
    pub ordering: Option<OrderingKind>,
    /// Overrides the file's precedence, greatest first.
    pub precedence: Option<Vec<String>>,
    pub weights: Vec<(String, u32)>,
    pub model_bound: u64,
    pub trace: bool,
    /// Existential variable names, most significant first.
    pub alpha_tiebreak: Option<Vec<String>>,
    pub assume_free: bool,
    pub deletion: bool,
    pub age_ratio: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            mode: Mode::FixedDomain,
            calculus: CalculusVariant::Sfd,
            induction: None,
            max_iterations: 1000,
            max_clauses: 20000,
            timeout: None,
            ordering: None,
            precedence: None,
            weights: Vec::new(),
            model_bound: 6,
            trace: true,
            alpha_tiebreak: None,
            assume_free: false,
            deletion: true,
            age_ratio: 5,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("induction directive rejected: {0}")]
    Induction(#[from] crate::induction::InductionError),
    #[error("model construction failed: {0}")]
    Model(#[from] crate::model::ModelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Theorem,
    NonTheorem,
    GaveUp,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Theorem => "THEOREM",
            VerdictKind::NonTheorem => "NON_THEOREM",
            VerdictKind::GaveUp => "GAVE_UP",
        })
    }
}

impl VerdictKind {
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictKind::Theorem => 0,
            VerdictKind::NonTheorem => 1,
            VerdictKind::GaveUp => 2,
        }
    }
}

/// One line of the structured trace stream.
#[derive(Clone, Debug, Serialize)]
pub struct TraceRecord {
    pub id: usize,
    pub rule: String,
    pub parents: Vec<usize>,
    pub clause: String,
    pub simplified_by: Vec<usize>,
    pub rho1: Option<Vec<String>>,
    pub rho2: Option<Vec<String>>,
    pub deleted: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub verdict: VerdictKind,
    pub limit: Option<Limit>,
    pub semantics: Vec<Semantics>,
    pub method: String,
    pub empty_constraints: Vec<String>,
    pub alpha: Option<Constraint>,
    pub alpha_text: Option<String>,
    pub complement: Option<SolvedForm>,
    pub complement_text: Option<String>,
    pub model_dump: Option<String>,
    pub trace: Vec<String>,
    pub records: Vec<TraceRecord>,
    pub notices: Vec<String>,
    pub iterations: usize,
    pub induction_steps: usize,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// The trace as line-delimited JSON.
    pub fn trace_jsonl(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.limit {
            Some(l) => writeln!(f, "VERDICT: {} ({l})", self.verdict)?,
            None => writeln!(f, "VERDICT: {}", self.verdict)?,
        }
        let sem: Vec<String> = self.semantics.iter().map(ToString::to_string).collect();
        writeln!(f, "SEMANTICS: {}", sem.join(", "))?;
        writeln!(f, "METHOD: {}", self.method)?;
        for n in &self.notices {
            writeln!(f, "NOTICE: {n}")?;
        }
        writeln!(f, "EMPTY-CLAUSE CONSTRAINTS:")?;
        for c in &self.empty_constraints {
            writeln!(f, "  {c}")?;
        }
        if self.verdict == VerdictKind::NonTheorem {
            writeln!(
                f,
                "ALPHA_N: {}",
                self.alpha_text.as_deref().unwrap_or("none")
            )?;
            if let Some(c) = &self.complement_text {
                writeln!(f, "COMPLEMENT: {c}")?;
            }
            if let Some(m) = &self.model_dump {
                writeln!(f, "MODEL:")?;
                for line in m.lines() {
                    writeln!(f, "  {line}")?;
                }
            }
        }
        if !self.trace.is_empty() {
            writeln!(f, "TRACE:")?;
            for line in &self.trace {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

/// Everything a run produced, for callers that inspect the final state.
pub struct RunOutcome {
    pub report: Report,
    pub saturation: Saturation,
    pub model: Option<ModelHandle>,
    pub clausified: Clausified,
}

fn horn_axioms(p: &Problem) -> bool {
    p.axioms.iter().all(|a| a.clause.is_horn())
}

fn plan(config: &Config, problem: &Problem) -> (ClausifyMode, Vec<Semantics>, String, bool) {
    match config.mode {
        Mode::FirstOrder => (
            ClausifyMode::FirstOrder,
            vec![Semantics::FirstOrder],
            "superposition without existential variables".into(),
            false,
        ),
        Mode::FixedDomain => (
            ClausifyMode::FixedDomain,
            vec![Semantics::FixedDomain],
            "fixed-domain saturation".into(),
            false,
        ),
        Mode::Inductive => {
            let conj = problem.conjecture.as_ref();
            let positive = conj.is_some_and(|c| is_positive_conjunction(&c.matrix));
            let horn = horn_axioms(problem) && !problem.has_declared_existentials();
            match conj {
                Some(c) if horn && positive && c.universals.is_empty() => (
                    ClausifyMode::FirstOrder,
                    vec![Semantics::MinimalModel, Semantics::FirstOrder],
                    "first-order refutation (Horn axioms, existential positive conjecture)".into(),
                    false,
                ),
                Some(c) if horn && positive && c.existentials.is_empty() => (
                    ClausifyMode::FixedDomain,
                    vec![Semantics::MinimalModel, Semantics::FixedDomain],
                    "fixed-domain saturation (Horn axioms, universal positive conjecture)".into(),
                    true,
                ),
                _ => (
                    ClausifyMode::FixedDomain,
                    vec![Semantics::MinimalModel],
                    "fixed-domain saturation with induction".into(),
                    true,
                ),
            }
        }
    }
}

fn hint_directive(
    problem: &Problem,
    c: &Clausified,
    sat: &Saturation,
) -> Result<Option<InductionDirective>, RunError> {
    if problem.hints.is_empty() {
        return Ok(None);
    }
    let n = c.sig.existentials().len();
    let mut rho1: Vec<Option<Term>> = vec![None; n];
    let mut rho2: Vec<Option<Term>> = vec![None; n];
    for h in &problem.hints {
        let idx = c
            .conjecture_existentials
            .iter()
            .position(|(var, _)| *var == h.var)
            .ok_or_else(|| {
                InputError::new(
                    Some(h.span),
                    format!("`{}` is not a universal variable of the conjecture", h.var),
                )
            })?;
        rho1[idx] = Some(h.lower.clone());
        rho2[idx] = Some(h.upper.clone());
    }
    let missing = |r: &[Option<Term>]| r.iter().any(Option::is_none);
    if missing(&rho1) || missing(&rho2) {
        return Err(RunError::Config(
            "induction hints must cover every universal variable of the conjecture".into(),
        ));
    }
    let query: Vec<_> = sat
        .query_ids()
        .iter()
        .map(|id| sat.trace()[id - 1].clause.clone())
        .collect();
    Ok(Some(InductionDirective {
        query: query.clone(),
        premises: query,
        rho1: rho1.into_iter().flatten().collect(),
        rho2: rho2.into_iter().flatten().collect(),
        justification: Justification::User,
    }))
}

pub fn run(config: &Config, problem: &Problem) -> Result<RunOutcome, RunError> {
    if config.calculus == CalculusVariant::SfdGeneral && config.mode == Mode::FirstOrder {
        return Err(RunError::Config(
            "the general calculus needs fixed-domain or inductive mode".into(),
        ));
    }
    let policy = match (config.induction, config.mode) {
        (None, Mode::Inductive) => InductionPolicy::Heuristic,
        (None, _) | (Some(InductionPolicy::Off), _) => InductionPolicy::Off,
        (Some(p), Mode::Inductive) => p,
        (Some(_), _) => {
            return Err(RunError::Config(
                "induction is only available in inductive mode".into(),
            ))
        }
    };
    let (cmode, semantics, method, induction_allowed) = plan(config, problem);
    let mut notices = Vec::new();
    if config.mode == Mode::Inductive && semantics == [Semantics::MinimalModel] {
        notices.push(
            "no shortcut to another semantics applies; verdicts hold for the minimal model".into(),
        );
    }
    let c = clausify(problem, cmode)?;
    let mut problem_ord = problem.clone();
    if let Some(k) = config.ordering {
        problem_ord.ordering = Some(k);
    }
    if let Some(p) = &config.precedence {
        problem_ord.precedence = Some(p.clone());
    }
    problem_ord.weights.extend(config.weights.iter().cloned());
    let ord: OrderingSpec = problem_ord.ordering_for(&c.sig)?;
    let tiebreak = match &config.alpha_tiebreak {
        None => None,
        Some(names) => Some(
            names
                .iter()
                .map(|n| {
                    c.sig.existential_index(n).ok_or_else(|| {
                        RunError::Config(format!("unknown existential variable `{n}` in tie-break"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let sconfig = SaturationConfig {
        variant: config.calculus,
        induction: if induction_allowed {
            policy
        } else {
            InductionPolicy::Off
        },
        max_iterations: config.max_iterations,
        max_clauses: config.max_clauses,
        timeout: config.timeout,
        age_ratio: config.age_ratio,
        deletion: config.deletion,
        alpha_tiebreak: tiebreak,
        assume_free: config.assume_free,
        class_bound: config.model_bound.min(4),
    };
    let mut sat = Saturation::new(&c.sig, &ord, &c.axioms, &c.query, sconfig)?;
    if induction_allowed && policy == InductionPolicy::Manual {
        match hint_directive(problem, &c, &sat)? {
            Some(d) => {
                sat.apply_directive(&d)?;
            }
            None => notices
                .push("manual induction requested but the problem has no induct lines".into()),
        }
    }
    let verdict = sat.saturate();
    let induction_steps = sat.trace().iter().filter(|e| e.rule == Rule::Ind).count();
    let mut semantics = semantics;
    if config.mode == Mode::Inductive
        && induction_steps == 0
        && !semantics.contains(&Semantics::FixedDomain)
        && cmode == ClausifyMode::FixedDomain
    {
        semantics.push(Semantics::FixedDomain);
    }
    if matches!(verdict, Verdict::NonTheorem { .. })
        && config.mode == Mode::Inductive
        && !semantics.contains(&Semantics::FixedDomain)
        && cmode == ClausifyMode::FixedDomain
    {
        semantics.push(Semantics::FixedDomain);
    }
    let names: Vec<String> = (0..c.sig.existentials().len())
        .map(|i| {
            c.conjecture_existentials
                .get(i)
                .map_or_else(|| c.sig.existentials()[i].name.clone(), |(x, _)| x.clone())
        })
        .collect();
    let sig = sat.signature().clone();
    let empty_constraints: Vec<String> = sat
        .empty_constraints()
        .iter()
        .map(|a| a.display(&sig).to_string())
        .collect();
    let trace: Vec<String> = if config.trace {
        sat.trace()
            .iter()
            .map(|e| sat.render_entry(e, &names))
            .collect()
    } else {
        Vec::new()
    };
    let records = sat
        .trace()
        .iter()
        .map(|e| TraceRecord {
            id: e.id,
            rule: e.rule.to_string(),
            parents: e.parents.clone(),
            clause: e.clause.display_constraint_first(&sig).to_string(),
            simplified_by: e.simplified_by.clone(),
            rho1: e
                .induction
                .as_ref()
                .map(|(r, _)| r.iter().map(|t| sig.term(t).to_string()).collect()),
            rho2: e
                .induction
                .as_ref()
                .map(|(_, r)| r.iter().map(|t| sig.term(t).to_string()).collect()),
            deleted: sat.status(e.id) == Status::Deleted,
        })
        .collect();
    let mut report = Report {
        verdict: VerdictKind::Theorem,
        limit: None,
        semantics,
        method,
        empty_constraints,
        alpha: None,
        alpha_text: None,
        complement: None,
        complement_text: None,
        model_dump: None,
        trace,
        records,
        notices,
        iterations: sat.iterations(),
        induction_steps,
    };
    let mut model = None;
    match verdict {
        Verdict::Theorem => {}
        Verdict::GaveUp { limit } => {
            report.verdict = VerdictKind::GaveUp;
            report.limit = Some(limit);
        }
        Verdict::NonTheorem { alpha, complement } => {
            report.verdict = VerdictKind::NonTheorem;
            report.complement_text = Some(complement.display(&sig).to_string());
            report.complement = Some(complement);
            let alpha = if sig.existentials().is_empty() {
                Some(Constraint::new(Vec::new()))
            } else {
                alpha
            };
            if let Some(a) = &alpha {
                report.alpha_text = Some(if a.is_empty() {
                    "ε".into()
                } else {
                    a.display(&sig).to_string()
                });
                let m = ModelHandle::construct(
                    &sig,
                    &ord,
                    &sat.retained_clauses(),
                    a,
                    config.model_bound,
                )?
                .assume_free_constructors(config.assume_free);
                report.model_dump = Some(m.dump());
                model = Some(m);
            }
            report.alpha = alpha;
        }
    }
    Ok(RunOutcome {
        report,
        saturation: sat,
        model,
        clausified: c,
    })
}

/// Parses and runs a problem text.
pub fn run_text(config: &Config, text: &str) -> Result<RunOutcome, RunError> {
    run(config, &Problem::parse(text)?)
}
