use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, ValueEnum};

use sfd::calculus::CalculusVariant;
use sfd::frontend::elaborate::elaborate;
use sfd::frontend::run::{run, Config, Mode};
use sfd::frontend::tptp::parse_tptp_cnf;
use sfd::frontend::Problem;
use sfd::ordering::OrderingKind;
use sfd::saturation::InductionPolicy;

const INPUT_ERROR: u8 = 3;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    FirstOrder,
    FixedDomain,
    Inductive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CalculusArg {
    Sfd,
    SfdGeneral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InductionArg {
    Off,
    Heuristic,
    Manual,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderingArg {
    Kbo,
    Lpo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Native,
    Tptp,
}

/// Saturation-based prover for fixed-domain and minimal-model entailment.
#[derive(Debug, Parser)]
#[command(name = "sfd", version)]
struct Args {
    /// Problem file, or `-` for standard input.
    input: PathBuf,
    /// Entailment relation to decide.
    #[arg(long, value_enum, default_value = "fixed-domain")]
    mode: ModeArg,
    /// Calculus variant.
    #[arg(long, value_enum, default_value = "sfd")]
    calculus: CalculusArg,
    /// Induction policy; defaults to heuristic in inductive mode and off elsewhere.
    #[arg(long, value_enum)]
    induction: Option<InductionArg>,
    #[arg(long, default_value_t = 1000)]
    max_iterations: usize,
    #[arg(long, default_value_t = 20000)]
    max_clauses: usize,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Term ordering, overriding the problem file.
    #[arg(long, value_enum)]
    ordering: Option<OrderingArg>,
    /// Symbol precedence, greatest first, e.g. `R>C>G` or `R,C,G`.
    #[arg(long)]
    precedence: Option<String>,
    /// Symbol weights, e.g. `s=2,plus=1`.
    #[arg(long)]
    kbo_weights: Option<String>,
    /// Weight bound for the model construction.
    #[arg(long, default_value_t = 6)]
    model_bound: u64,
    /// Print the derivation trace.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    trace: bool,
    /// Write the trace as JSON lines to this file.
    #[arg(long)]
    trace_jsonl: Option<PathBuf>,
    /// Existential variable order for choosing alpha_N: `declaration` or a comma list.
    #[arg(long)]
    alpha_tiebreak: Option<String>,
    /// Treat every constructor as free when certifying induction orders.
    #[arg(long)]
    assume_free_constructors: bool,
    /// Keep redundant clauses.
    #[arg(long)]
    no_deletion: bool,
    /// Input format; `.p` files default to TPTP CNF.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

fn split_list(s: &str) -> Vec<String> {
    s.split([',', '>'])
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

fn parse_weights(s: &str) -> Result<Vec<(String, u32)>, String> {
    split_list(s)
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| format!("weight `{kv}` is not of the form name=value"))?;
            let w = v
                .trim()
                .parse::<u32>()
                .map_err(|e| format!("weight `{kv}`: {e}"))?;
            Ok((k.trim().to_string(), w))
        })
        .collect()
}

fn config_of(args: &Args) -> Result<Config, String> {
    Ok(Config {
        mode: match args.mode {
            ModeArg::FirstOrder => Mode::FirstOrder,
            ModeArg::FixedDomain => Mode::FixedDomain,
            ModeArg::Inductive => Mode::Inductive,
        },
        calculus: match args.calculus {
            CalculusArg::Sfd => CalculusVariant::Sfd,
            CalculusArg::SfdGeneral => CalculusVariant::SfdGeneral,
        },
        induction: args.induction.map(|i| match i {
            InductionArg::Off => InductionPolicy::Off,
            InductionArg::Heuristic => InductionPolicy::Heuristic,
            InductionArg::Manual => InductionPolicy::Manual,
        }),
        max_iterations: args.max_iterations,
        max_clauses: args.max_clauses,
        timeout: match args.timeout {
            Some(t) if !(t.is_finite() && t >= 0.0) => return Err(format!("invalid timeout {t}")),
            t => t.map(Duration::from_secs_f64),
        },
        ordering: args.ordering.map(|o| match o {
            OrderingArg::Kbo => OrderingKind::Kbo,
            OrderingArg::Lpo => OrderingKind::Lpo,
        }),
        precedence: args.precedence.as_deref().map(split_list),
        weights: args
            .kbo_weights
            .as_deref()
            .map(parse_weights)
            .transpose()?
            .unwrap_or_default(),
        model_bound: args.model_bound,
        trace: args.trace,
        alpha_tiebreak: match args.alpha_tiebreak.as_deref() {
            None | Some("declaration") => None,
            Some(list) => Some(split_list(list)),
        },
        assume_free: args.assume_free_constructors,
        deletion: !args.no_deletion,
        ..Config::default()
    })
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn load(args: &Args) -> Result<Problem, String> {
    let text = read_input(&args.input).map_err(|e| format!("{}: {e}", args.input.display()))?;
    let tptp = match args.format {
        Some(FormatArg::Tptp) => true,
        Some(FormatArg::Native) => false,
        None => args.input.extension().is_some_and(|e| e == "p"),
    };
    let problem = if tptp {
        elaborate(&parse_tptp_cnf(&text).map_err(|e| e.to_string())?)
    } else {
        Problem::parse(&text)
    };
    problem.map_err(|e| format!("{}:{e}", args.input.display()))
}

fn main() -> ExitCode {
    // Usage errors share the input-error exit code; clap's own code 2 would
    // read as GAVE_UP.
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let fail = |msg: String| {
        eprintln!("error: {msg}");
        ExitCode::from(INPUT_ERROR)
    };
    let config = match config_of(&args) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let problem = match load(&args) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let outcome = match run(&config, &problem) {
        Ok(o) => o,
        Err(e) => return fail(e.to_string()),
    };
    if let Err(e) = write!(io::stdout().lock(), "{}", outcome.report) {
        // A closed pipe, as in `sfd … | head`, is not an error.
        if e.kind() != io::ErrorKind::BrokenPipe {
            return fail(format!("stdout: {e}"));
        }
    }
    if let Some(path) = &args.trace_jsonl {
        if let Err(e) = fs::write(path, outcome.report.trace_jsonl()) {
            return fail(format!("{}: {e}", path.display()));
        }
    }
    ExitCode::from(outcome.report.exit_code() as u8)
}
