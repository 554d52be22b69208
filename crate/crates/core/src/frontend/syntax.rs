//! Problem file syntax: lexer, parser and printer.
//!
//! One statement per line, an optional trailing `.`, and `%` comments:
//!
//! ```text
//! sort nat
//! func 0 : nat
//! func s : nat -> nat
//! pred G : nat, nat
//! axiom -> G(s(0), 0)
//! axiom G(x, y) -> G(s(x), s(y))
//! conjecture forall x. G(s(x), x)
//! induct x := z < s(z)
//! ```

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{span}: {message}")]
pub struct SyntaxError {
    pub span: Span,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct TermAst {
    pub name: String,
    pub args: Vec<TermAst>,
    pub span: Span,
}

impl PartialEq for TermAst {
    fn eq(&self, other: &TermAst) -> bool {
        self.name == other.name && self.args == other.args
    }
}

impl Eq for TermAst {}

impl TermAst {
    pub fn new(name: &str, args: Vec<TermAst>) -> TermAst {
        TermAst {
            name: name.into(),
            args,
            span: Span::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LitAst {
    Eq(TermAst, TermAst),
    Atom(TermAst),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseAst {
    pub antecedent: Vec<LitAst>,
    pub succedent: Vec<LitAst>,
    pub constraint: Vec<(String, TermAst)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quant {
    Forall,
    Exists,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVar {
    pub name: String,
    pub sort: Option<String>,
    /// Explicit name of the existential variable this universal becomes.
    pub rename: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaAst {
    Lit(LitAst),
    Neq(TermAst, TermAst),
    Not(Box<FormulaAst>),
    And(Vec<FormulaAst>),
    Or(Vec<FormulaAst>),
    Implies(Box<FormulaAst>, Box<FormulaAst>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureAst {
    pub prefix: Vec<(Quant, Vec<QVar>)>,
    pub matrix: FormulaAst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Sort(String),
    Func {
        name: String,
        args: Vec<String>,
        result: String,
    },
    Pred {
        name: String,
        args: Vec<String>,
    },
    Existential {
        name: String,
        sort: String,
    },
    Axiom(ClauseAst),
    Conjecture(ConjectureAst),
    Precedence(Vec<String>),
    Weight(String, u32),
    Ordering(String),
    Induct {
        var: String,
        lower: TermAst,
        upper: TermAst,
    },
}

#[derive(Clone, Debug, Default)]
pub struct ProblemFile {
    pub items: Vec<(Item, Span)>,
}

impl ProblemFile {
    /// Equality of the statements, ignoring source positions.
    pub fn same_items(&self, other: &ProblemFile) -> bool {
        self.items
            .iter()
            .map(|i| &i.0)
            .eq(other.items.iter().map(|i| &i.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Punct(&'static str),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
}

const PUNCT: &[(&str, &str)] = &[
    ("||", "||"),
    ("∥", "||"),
    ("->", "->"),
    ("→", "->"),
    ("=>", "=>"),
    ("⇒", "=>"),
    ("!=", "!="),
    ("≉", "!="),
    (":=", ":="),
    ("≈", "="),
    ("=", "="),
    ("(", "("),
    (")", ")"),
    (",", ","),
    (".", "."),
    (":", ":"),
    ("|", "|"),
    ("∨", "|"),
    ("&", "&"),
    ("∧", "&"),
    ("~", "~"),
    ("¬", "~"),
    (">", ">"),
    ("<", "<"),
    ("/", "/"),
    ("□", "[]"),
    ("[]", "[]"),
    ("∀", "forall"),
    ("∃", "exists"),
];

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '$'
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        let span = Span {
            line: lineno,
            col: i + 1,
        };
        if c == '%' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if is_ident_char(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i].1) {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push(Token {
                tok: Tok::Ident(text),
                span,
            });
            continue;
        }
        let rest = &line[byte..];
        match PUNCT.iter().find(|(p, _)| rest.starts_with(p)) {
            Some((p, canon)) => {
                let tok = match *canon {
                    "forall" | "exists" => Tok::Ident((*canon).into()),
                    _ => Tok::Punct(canon),
                };
                out.push(Token { tok, span });
                i += p.chars().count();
            }
            None => {
                return Err(SyntaxError {
                    span,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map_or(self.end, |t| t.span)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            span: self.span(),
            message: message.into(),
        })
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn eat(&mut self, p: &str) -> bool {
        if self.is_punct(p) {
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

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected a name"),
        }
    }

    fn keyword(&mut self, k: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == k) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len() || (self.pos + 1 == self.toks.len() && self.is_punct("."))
    }

    fn finish(&mut self) -> Result<(), SyntaxError> {
        self.eat(".");
        if self.pos < self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn term(&mut self) -> Result<TermAst, SyntaxError> {
        let span = self.span();
        let name = self.ident()?;
        let mut args = Vec::new();
        if self.eat("(") {
            loop {
                args.push(self.term()?);
                if self.eat(")") {
                    break;
                }
                self.expect(",")?;
            }
        }
        Ok(TermAst { name, args, span })
    }

    fn literal(&mut self) -> Result<LitAst, SyntaxError> {
        let t = self.term()?;
        if self.eat("=") {
            Ok(LitAst::Eq(t, self.term()?))
        } else {
            Ok(LitAst::Atom(t))
        }
    }

    fn literals(&mut self, stop: &[&str]) -> Result<Vec<LitAst>, SyntaxError> {
        let mut out = Vec::new();
        if self.at_end() || stop.iter().any(|s| self.is_punct(s)) {
            return Ok(out);
        }
        loop {
            out.push(self.literal()?);
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn clause(&mut self) -> Result<ClauseAst, SyntaxError> {
        let mut c = ClauseAst {
            antecedent: Vec::new(),
            succedent: Vec::new(),
            constraint: Vec::new(),
        };
        if !self.eat("[]") {
            c.antecedent = self.literals(&["->"])?;
            self.expect("->")?;
            c.succedent = self.literals(&["||"])?;
        }
        if self.eat("||") && !self.at_end() {
            loop {
                let name = self.ident()?;
                self.expect("=")?;
                c.constraint.push((name, self.term()?));
                if !self.eat(",") {
                    break;
                }
            }
        }
        Ok(c)
    }

    fn qvars(&mut self) -> Result<Vec<QVar>, SyntaxError> {
        let mut out = Vec::new();
        loop {
            let name = self.ident()?;
            let sort = if self.eat(":") {
                Some(self.ident()?)
            } else {
                None
            };
            let rename = if self.eat("/") {
                Some(self.ident()?)
            } else {
                None
            };
            out.push(QVar { name, sort, rename });
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn conjecture(&mut self) -> Result<ConjectureAst, SyntaxError> {
        let mut prefix = Vec::new();
        loop {
            let q = if self.keyword("forall") {
                Quant::Forall
            } else if self.keyword("exists") {
                Quant::Exists
            } else {
                break;
            };
            let vars = self.qvars()?;
            self.expect(".")?;
            prefix.push((q, vars));
        }
        let matrix = self.formula()?;
        Ok(ConjectureAst { prefix, matrix })
    }

    fn formula(&mut self) -> Result<FormulaAst, SyntaxError> {
        let lhs = self.disjunction()?;
        if self.eat("=>") {
            let rhs = self.formula()?;
            return Ok(FormulaAst::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<FormulaAst, SyntaxError> {
        let mut parts = vec![self.conjunction()?];
        while self.eat("|") {
            parts.push(self.conjunction()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            FormulaAst::Or(parts)
        })
    }

    fn conjunction(&mut self) -> Result<FormulaAst, SyntaxError> {
        let mut parts = vec![self.unary()?];
        while self.eat("&") {
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            FormulaAst::And(parts)
        })
    }

    fn unary(&mut self) -> Result<FormulaAst, SyntaxError> {
        if self.eat("~") {
            return Ok(FormulaAst::Not(Box::new(self.unary()?)));
        }
        if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == "forall" || s == "exists") {
            return self.err("quantifiers must form a prefix: expected ∀*∃* followed by a quantifier-free matrix");
        }
        let t = self.term()?;
        if self.eat("=") {
            return Ok(FormulaAst::Lit(LitAst::Eq(t, self.term()?)));
        }
        if self.eat("!=") {
            return Ok(FormulaAst::Neq(t, self.term()?));
        }
        Ok(FormulaAst::Lit(LitAst::Atom(t)))
    }

    fn sort_list(&mut self) -> Result<Vec<String>, SyntaxError> {
        let mut out = vec![self.ident()?];
        while self.eat(",") {
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn item(&mut self) -> Result<Item, SyntaxError> {
        let kw = self.ident()?;
        match kw.as_str() {
            "sort" => Ok(Item::Sort(self.ident()?)),
            "func" => {
                let name = self.ident()?;
                self.expect(":")?;
                let mut sorts = self.sort_list()?;
                if self.eat("->") {
                    let result = self.ident()?;
                    Ok(Item::Func {
                        name,
                        args: sorts,
                        result,
                    })
                } else if sorts.len() == 1 {
                    Ok(Item::Func {
                        name,
                        args: Vec::new(),
                        result: sorts.pop().expect("one sort"),
                    })
                } else {
                    self.err("expected `->` and a result sort")
                }
            }
            "pred" => {
                let name = self.ident()?;
                let args = if self.eat(":") {
                    self.sort_list()?
                } else {
                    Vec::new()
                };
                Ok(Item::Pred { name, args })
            }
            "existential" => {
                let name = self.ident()?;
                self.expect(":")?;
                Ok(Item::Existential {
                    name,
                    sort: self.ident()?,
                })
            }
            "axiom" | "clause" => Ok(Item::Axiom(self.clause()?)),
            "conjecture" => Ok(Item::Conjecture(self.conjecture()?)),
            "precedence" => {
                let mut out = vec![self.ident()?];
                while self.eat(">") {
                    out.push(self.ident()?);
                }
                Ok(Item::Precedence(out))
            }
            "weight" => {
                let name = self.ident()?;
                self.expect("=")?;
                let span = self.span();
                let w = self.ident()?;
                let w = w.parse().map_err(|_| SyntaxError {
                    span,
                    message: format!("`{w}` is not a weight"),
                })?;
                Ok(Item::Weight(name, w))
            }
            "ordering" => Ok(Item::Ordering(self.ident()?)),
            "induct" => {
                let var = self.ident()?;
                self.expect(":=")?;
                let lower = self.term()?;
                self.expect("<")?;
                let upper = self.term()?;
                Ok(Item::Induct { var, lower, upper })
            }
            other => {
                self.pos -= 1;
                self.err(format!("unknown statement `{other}`"))
            }
        }
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, SyntaxError> {
    let mut items = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = lex_line(line, i + 1)?;
        if toks.is_empty() {
            continue;
        }
        let span = toks[0].span;
        let end = Span {
            line: i + 1,
            col: line.chars().count() + 1,
        };
        let mut p = Parser { toks, pos: 0, end };
        let item = p.item()?;
        p.finish()?;
        items.push((item, span));
    }
    Ok(ProblemFile { items })
}

/// Parses a single clause in problem-file syntax.
pub fn parse_clause_ast(text: &str) -> Result<ClauseAst, SyntaxError> {
    let toks = lex_line(text, 1)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: Span {
            line: 1,
            col: text.chars().count() + 1,
        },
    };
    let c = p.clause()?;
    p.finish()?;
    Ok(c)
}

pub fn parse_term_ast(text: &str) -> Result<TermAst, SyntaxError> {
    let toks = lex_line(text, 1)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: Span {
            line: 1,
            col: text.chars().count() + 1,
        },
    };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

impl fmt::Display for TermAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.args.is_empty() {
            let args: Vec<String> = self.args.iter().map(ToString::to_string).collect();
            write!(f, "({})", args.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for LitAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LitAst::Eq(a, b) => write!(f, "{a} = {b}"),
            LitAst::Atom(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Display for ClauseAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ls: &[LitAst]| {
            ls.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.antecedent.is_empty() && self.succedent.is_empty() {
            write!(f, "[]")?;
        } else {
            let (a, s) = (join(&self.antecedent), join(&self.succedent));
            write!(
                f,
                "{}->{}",
                if a.is_empty() { a } else { a + " " },
                if s.is_empty() { s } else { format!(" {s}") }
            )?;
        }
        if !self.constraint.is_empty() {
            let parts: Vec<String> = self
                .constraint
                .iter()
                .map(|(v, t)| format!("{v} = {t}"))
                .collect();
            write!(f, " || {}", parts.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for FormulaAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |g: &FormulaAst| match g {
            FormulaAst::Lit(_) | FormulaAst::Neq(..) | FormulaAst::Not(_) => g.to_string(),
            _ => format!("({g})"),
        };
        match self {
            FormulaAst::Lit(l) => write!(f, "{l}"),
            FormulaAst::Neq(a, b) => write!(f, "{a} != {b}"),
            FormulaAst::Not(g) => write!(f, "~{}", wrap(g)),
            FormulaAst::And(gs) => {
                write!(f, "{}", gs.iter().map(wrap).collect::<Vec<_>>().join(" & "))
            }
            FormulaAst::Or(gs) => {
                write!(f, "{}", gs.iter().map(wrap).collect::<Vec<_>>().join(" | "))
            }
            FormulaAst::Implies(a, b) => write!(f, "{} => {}", wrap(a), wrap(b)),
        }
    }
}

impl fmt::Display for ConjectureAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, vars) in &self.prefix {
            let vs: Vec<String> = vars
                .iter()
                .map(|v| {
                    let mut s = v.name.clone();
                    if let Some(so) = &v.sort {
                        s += &format!(":{so}");
                    }
                    if let Some(r) = &v.rename {
                        s += &format!("/{r}");
                    }
                    s
                })
                .collect();
            write!(
                f,
                "{} {}. ",
                if *q == Quant::Forall {
                    "forall"
                } else {
                    "exists"
                },
                vs.join(", ")
            )?;
        }
        write!(f, "{}", self.matrix)
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Sort(s) => write!(f, "sort {s}"),
            Item::Func { name, args, result } if args.is_empty() => {
                write!(f, "func {name} : {result}")
            }
            Item::Func { name, args, result } => {
                write!(f, "func {name} : {} -> {result}", args.join(", "))
            }
            Item::Pred { name, args } if args.is_empty() => write!(f, "pred {name}"),
            Item::Pred { name, args } => write!(f, "pred {name} : {}", args.join(", ")),
            Item::Existential { name, sort } => write!(f, "existential {name} : {sort}"),
            Item::Axiom(c) => write!(f, "axiom {c}"),
            Item::Conjecture(c) => write!(f, "conjecture {c}"),
            Item::Precedence(p) => write!(f, "precedence {}", p.join(" > ")),
            Item::Weight(n, w) => write!(f, "weight {n} = {w}"),
            Item::Ordering(o) => write!(f, "ordering {o}"),
            Item::Induct { var, lower, upper } => write!(f, "induct {var} := {lower} < {upper}"),
        }
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (item, _) in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}
