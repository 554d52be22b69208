//! Runs the `sfd` binary on corpus problems and checks output and exit codes.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn problem(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../problems")
        .join(format!("{name}.sfd"))
}

fn sfd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sfd"))
        .args(args)
        .output()
        .unwrap()
}

fn sfd_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sfd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn exit_codes_follow_the_verdict() {
    let greater = problem("greater");
    let even = problem("even");
    let g = greater.to_str().unwrap();
    let theorem = sfd(&[g, "--mode", "inductive"]);
    assert_eq!(theorem.status.code(), Some(0), "{}", stdout(&theorem));
    assert!(stdout(&theorem).starts_with("VERDICT: THEOREM\n"));
    let non = sfd(&[even.to_str().unwrap(), "--mode", "inductive"]);
    assert_eq!(non.status.code(), Some(1));
    assert!(stdout(&non).contains("ALPHA_N: u≈s(0)"));
    let gave_up = sfd(&[g, "--max-iterations", "8"]);
    assert_eq!(gave_up.status.code(), Some(2));
    assert!(stdout(&gave_up).starts_with("VERDICT: GAVE_UP (iteration limit)"));
}

#[test]
fn input_and_configuration_errors_exit_with_three() {
    let missing = sfd(&["/nonexistent/problem.sfd"]);
    assert_eq!(missing.status.code(), Some(3));
    assert!(stderr(&missing).starts_with("error:"));
    let syntax = sfd_stdin(&["-"], "sort nat\nfunc 0 nat\n");
    assert_eq!(syntax.status.code(), Some(3));
    assert!(stderr(&syntax).contains(":2:"), "{}", stderr(&syntax));
    let greater = problem("greater");
    let g = greater.to_str().unwrap();
    assert_eq!(sfd(&[g, "--precedence", "s>nosuch"]).status.code(), Some(3));
    assert_eq!(sfd(&[g, "--kbo-weights", "s=heavy"]).status.code(), Some(3));
    assert_eq!(sfd(&[g, "--timeout=-1"]).status.code(), Some(3));
    assert_eq!(sfd(&[g, "--mode", "sideways"]).status.code(), Some(3));
    assert_eq!(sfd(&["--help"]).status.code(), Some(0));
    assert_eq!(
        sfd(&[g, "--mode", "first-order", "--calculus", "sfd-general"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn reads_standard_input() {
    let text = std::fs::read_to_string(problem("first_order")).unwrap();
    let out = sfd_stdin(&["-", "--mode", "first-order"], &text);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn writes_the_trace_as_json_lines() {
    let path = scratch("greater.jsonl");
    let out = sfd(&[
        problem("greater").to_str().unwrap(),
        "--mode",
        "inductive",
        "--trace-jsonl",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 6);
    assert!(lines
        .iter()
        .all(|l| l.starts_with("{\"id\":") && l.ends_with('}')));
    assert!(lines
        .iter()
        .any(|l| l.contains("\"rule\":\"Ind\"") && l.contains("\"rho2\":[\"s(x)\"]")));
}

#[test]
fn trace_can_be_turned_off() {
    let out = sfd(&[problem("elevator").to_str().unwrap(), "--trace", "false"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("TRACE:"));
}

#[test]
fn precedence_flag_overrides_the_file() {
    let path = problem("eqelim");
    let p = path.to_str().unwrap();
    assert!(stdout(&sfd(&[p])).contains("EqElim(1,2)"));
    assert!(stdout(&sfd(&[p, "--precedence", "a>b"])).contains("ConSup(1,2)"));
}

#[test]
fn reads_tptp_cnf() {
    let path = scratch("refutable.p");
    std::fs::write(
        &path,
        "% two clauses\ncnf(a, axiom, p(a)).\ncnf(b, negated_conjecture, ~p(X)).\n",
    )
    .unwrap();
    let out = sfd(&[path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}{}",
        stdout(&out),
        stderr(&out)
    );
    let sat = scratch("satisfiable.p");
    std::fs::write(&sat, "cnf(a, axiom, p(a)).\ncnf(b, axiom, ~q(X)).\n").unwrap();
    assert_eq!(sfd(&[sat.to_str().unwrap()]).status.code(), Some(1));
    let bad = scratch("bad.p");
    std::fs::write(&bad, "fof(a, axiom, p).\n").unwrap();
    assert_eq!(sfd(&[bad.to_str().unwrap()]).status.code(), Some(3));
}
