//! Importer for plain CNF problems in TPTP notation.
//!
//! Only `cnf(name, role, clause).` statements are accepted. Every role is
//! read as an axiom, so a problem is a theorem exactly when the clause set is
//! unsatisfiable. Symbols live in the single sort `$i`.

use std::collections::BTreeMap;

use super::syntax::{ClauseAst, Item, LitAst, ProblemFile, Span, SyntaxError, TermAst};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Var(String),
    Punct(&'static str),
}

const PUNCT: &[&str] = &["!=", "(", ")", ",", ".", "|", "~", "="];

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, SyntaxError> {
    let mut out = Vec::new();
    let mut in_block = false;
    for (lineno, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let span = Span {
                line: lineno + 1,
                col: i + 1,
            };
            let rest: String = chars[i..].iter().collect();
            if in_block {
                if rest.starts_with("*/") {
                    in_block = false;
                    i += 2;
                } else {
                    i += 1;
                }
                continue;
            }
            let c = chars[i];
            if c == '%' {
                break;
            }
            if rest.starts_with("/*") {
                in_block = true;
                i += 2;
                continue;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_alphanumeric() || c == '_' || c == '$' {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '$')
                {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = if c.is_uppercase() || c == '_' {
                    Tok::Var(word)
                } else {
                    Tok::Word(word)
                };
                out.push((tok, span));
                continue;
            }
            if c == '\'' {
                let end = chars[i + 1..]
                    .iter()
                    .position(|&d| d == '\'')
                    .ok_or(SyntaxError {
                        span,
                        message: "unterminated quoted name".into(),
                    })?;
                let word: String = chars[i + 1..i + 1 + end].iter().collect();
                out.push((Tok::Word(word), span));
                i += end + 2;
                continue;
            }
            match PUNCT.iter().find(|p| rest.starts_with(**p)) {
                Some(p) => {
                    out.push((Tok::Punct(p), span));
                    i += p.len();
                }
                None => {
                    return Err(SyntaxError {
                        span,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .or(self.toks.last())
            .map_or(Span::default(), |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            span: self.span(),
            message: message.into(),
        })
    }

    fn eat(&mut self, p: &str) -> bool {
        if matches!(self.toks.get(self.pos), Some((Tok::Punct(q), _)) if *q == p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, p: &str) -> Result<(), SyntaxError> {
        if self.eat(p) {
            Ok(())
        } else {
            self.err(format!("expected `{p}`"))
        }
    }

    fn word(&mut self) -> Result<String, SyntaxError> {
        match self.toks.get(self.pos) {
            Some((Tok::Word(w), _)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => self.err("expected a name"),
        }
    }

    fn term(&mut self) -> Result<TermAst, SyntaxError> {
        let span = self.span();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Var(v), _)) => {
                self.pos += 1;
                Ok(TermAst {
                    name: v,
                    args: Vec::new(),
                    span,
                })
            }
            Some((Tok::Word(w), _)) => {
                self.pos += 1;
                let mut args = Vec::new();
                if self.eat("(") {
                    loop {
                        args.push(self.term()?);
                        if !self.eat(",") {
                            break;
                        }
                    }
                    self.expect(")")?;
                }
                Ok(TermAst {
                    name: w,
                    args,
                    span,
                })
            }
            _ => self.err("expected a term"),
        }
    }

    /// One literal, with its polarity. `None` stands for `$false`.
    fn literal(&mut self) -> Result<Option<(bool, LitAst)>, SyntaxError> {
        let mut positive = !self.eat("~");
        let lhs = self.term()?;
        if lhs.name == "$false" && lhs.args.is_empty() {
            return if positive {
                Ok(None)
            } else {
                self.err("`~$false` is not supported")
            };
        }
        let lit = if self.eat("=") {
            LitAst::Eq(lhs, self.term()?)
        } else if self.eat("!=") {
            positive = !positive;
            LitAst::Eq(lhs, self.term()?)
        } else {
            LitAst::Atom(lhs)
        };
        Ok(Some((positive, lit)))
    }

    fn clause(&mut self) -> Result<ClauseAst, SyntaxError> {
        let parens = self.eat("(");
        let mut c = ClauseAst {
            antecedent: Vec::new(),
            succedent: Vec::new(),
            constraint: Vec::new(),
        };
        loop {
            match self.literal()? {
                Some((true, l)) => c.succedent.push(l),
                Some((false, l)) => c.antecedent.push(l),
                None => {}
            }
            if !self.eat("|") {
                break;
            }
        }
        if parens {
            self.expect(")")?;
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Func(usize),
    Pred(usize),
}

fn declare(
    sym: &mut BTreeMap<String, (Kind, Span)>,
    t: &TermAst,
    kind: Kind,
) -> Result<(), SyntaxError> {
    match sym.get(&t.name) {
        Some((k, _)) if *k != kind => Err(SyntaxError {
            span: t.span,
            message: format!("`{}` is used with two different roles or arities", t.name),
        }),
        Some(_) => Ok(()),
        None => {
            sym.insert(t.name.clone(), (kind, t.span));
            Ok(())
        }
    }
}

fn collect_term(
    sym: &mut BTreeMap<String, (Kind, Span)>,
    t: &TermAst,
    vars: &[String],
) -> Result<(), SyntaxError> {
    if t.args.is_empty() && vars.contains(&t.name) {
        return Ok(());
    }
    declare(sym, t, Kind::Func(t.args.len()))?;
    t.args.iter().try_for_each(|a| collect_term(sym, a, vars))
}

fn vars_of(t: &TermAst, out: &mut Vec<String>) {
    if t.args.is_empty() && t.name.starts_with(|c: char| c.is_uppercase() || c == '_') {
        out.push(t.name.clone());
    }
    t.args.iter().for_each(|a| vars_of(a, out));
}

/// Translates a CNF problem into the native problem representation.
pub fn parse_tptp_cnf(text: &str) -> Result<ProblemFile, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let mut clauses = Vec::new();
    while p.pos < p.toks.len() {
        let span = p.span();
        let kw = p.word()?;
        if kw != "cnf" {
            return Err(SyntaxError {
                span,
                message: format!("only `cnf` statements are supported, found `{kw}`"),
            });
        }
        p.expect("(")?;
        match p.toks.get(p.pos) {
            Some((Tok::Word(_) | Tok::Var(_), _)) => p.pos += 1,
            _ => return p.err("expected a clause name"),
        }
        p.expect(",")?;
        p.word()?;
        p.expect(",")?;
        let c = p.clause()?;
        if p.eat(",") {
            return p.err("annotations are not supported");
        }
        p.expect(")")?;
        p.expect(".")?;
        clauses.push((c, span));
    }
    let mut sym: BTreeMap<String, (Kind, Span)> = BTreeMap::new();
    for (c, _) in &clauses {
        let mut vars = Vec::new();
        for l in c.antecedent.iter().chain(&c.succedent) {
            match l {
                LitAst::Eq(a, b) => {
                    vars_of(a, &mut vars);
                    vars_of(b, &mut vars);
                }
                LitAst::Atom(a) => a.args.iter().for_each(|t| vars_of(t, &mut vars)),
            }
        }
        for l in c.antecedent.iter().chain(&c.succedent) {
            match l {
                LitAst::Eq(a, b) => {
                    collect_term(&mut sym, a, &vars)?;
                    collect_term(&mut sym, b, &vars)?;
                }
                LitAst::Atom(a) => {
                    declare(&mut sym, a, Kind::Pred(a.args.len()))?;
                    for t in &a.args {
                        collect_term(&mut sym, t, &vars)?;
                    }
                }
            }
        }
    }
    let sort = "$i".to_string();
    let mut items = vec![(Item::Sort(sort.clone()), Span::default())];
    for (name, (kind, span)) in &sym {
        let item = match *kind {
            Kind::Func(n) => Item::Func {
                name: name.clone(),
                args: vec![sort.clone(); n],
                result: sort.clone(),
            },
            Kind::Pred(n) => Item::Pred {
                name: name.clone(),
                args: vec![sort.clone(); n],
            },
        };
        items.push((item, *span));
    }
    items.extend(clauses.into_iter().map(|(c, s)| (Item::Axiom(c), s)));
    Ok(ProblemFile { items })
}
