//! The declarative input language.
//!
//! Line-oriented: every statement fits on one line, `#` starts a comment.
//!
//! ```text
//! ring NAME = zmod N | product(R1, R2, ...) | quotient(RING, SUB)
//!             | idealization(RING, MOD)
//! module NAME = regular RING | zmod D over RING | product(M1, M2, ...)
//!               | dsum(M1, M2, ...) | quotient(MOD, SUB)
//! set NAME in RING = {e1, e2, ...}
//! sub NAME of MOD = {e1, ...} | gen {e1, ...}
//! query classify SUB SET
//! query s_primary SUB SET
//! query s_prime SUB SET
//! query suite PROPERTY [maxring=N] [maxmod=N]
//! query search TARGET [maxring=N]
//! ```
//!
//! Elements are integers or nested tuples such as `(1,0)` or `((1,0),2)`.
//! Names must be declared before use; `product(M1, M2)` builds the module
//! over the product of the component rings, while `dsum(M1, M2)` is the
//! direct sum over one shared ring.

use std::fmt;

use alg_core::verify::{property_names, SearchTarget};
use alg_core::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntaxError {
    pub span: Span,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq)]
pub enum RingRhs {
    Zmod(u64),
    Product(Vec<String>),
    Quotient(String, String),
    Idealization(String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleRhs {
    Regular(String),
    ZmodOver(u64, String),
    Product(Vec<String>),
    DirectSum(Vec<String>),
    Quotient(String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decl {
    Ring { name: String, rhs: RingRhs, span: Span },
    Module { name: String, rhs: ModuleRhs, span: Span },
    Set { name: String, ring: String, elems: Vec<Value>, span: Span },
    Sub { name: String, module: String, generated: bool, elems: Vec<Value>, span: Span },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Ring { name, .. }
            | Decl::Module { name, .. }
            | Decl::Set { name, .. }
            | Decl::Sub { name, .. } => name,
        }
    }

    pub fn span(&self) -> Span {
        match self {
            Decl::Ring { span, .. }
            | Decl::Module { span, .. }
            | Decl::Set { span, .. }
            | Decl::Sub { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Query {
    Classify { sub: String, set: String, span: Span },
    SPrimary { sub: String, set: String, span: Span },
    SPrime { sub: String, set: String, span: Span },
    Suite { property: String, max_ring: Option<usize>, max_module: Option<usize>, span: Span },
    Search { target: String, max_ring: Option<usize>, span: Span },
}

impl Query {
    pub fn span(&self) -> Span {
        match self {
            Query::Classify { span, .. }
            | Query::SPrimary { span, .. }
            | Query::SPrime { span, .. }
            | Query::Suite { span, .. }
            | Query::Search { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Document {
    pub decls: Vec<Decl>,
    pub queries: Vec<Query>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Int(u64),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eq => write!(f, "`=`"),
        }
    }
}

struct Located {
    tok: Tok,
    span: Span,
}

fn lex_line(line: &str, line_no: usize) -> Result<Vec<Located>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line: line_no, col: i + 1 };
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            '(' => {
                out.push(Located { tok: Tok::LParen, span });
                i += 1;
            }
            ')' => {
                out.push(Located { tok: Tok::RParen, span });
                i += 1;
            }
            '{' => {
                out.push(Located { tok: Tok::LBrace, span });
                i += 1;
            }
            '}' => {
                out.push(Located { tok: Tok::RBrace, span });
                i += 1;
            }
            ',' => {
                out.push(Located { tok: Tok::Comma, span });
                i += 1;
            }
            '=' => {
                out.push(Located { tok: Tok::Eq, span });
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse::<u64>().map_err(|_| SyntaxError {
                    span,
                    message: format!("integer literal `{text}` is out of range"),
                })?;
                out.push(Located { tok: Tok::Int(n), span });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '-')
                {
                    i += 1;
                }
                out.push(Located {
                    tok: Tok::Word(chars[start..i].iter().collect()),
                    span,
                });
            }
            other => {
                return Err(SyntaxError {
                    span,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct LineParser {
    toks: Vec<Located>,
    pos: usize,
    line: usize,
    line_len: usize,
}

impl LineParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|l| l.span)
            .unwrap_or(Span { line: self.line, col: self.line_len + 1 })
    }

    fn err(&self, expected: &str) -> SyntaxError {
        let found = match self.peek() {
            Some(t) => format!("{t}"),
            None => "end of line".into(),
        };
        SyntaxError {
            span: self.here(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|l| l.tok.clone());
        self.pos += 1;
        t
    }

    fn expect_tok(&mut self, tok: Tok, expected: &str) -> Result<(), SyntaxError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(Tok::Word(w)) if w == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("keyword `{kw}`"))),
        }
    }

    fn name(&mut self, what: &str) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err(what)),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, SyntaxError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(what)),
        }
    }

    fn value(&mut self) -> Result<Value, SyntaxError> {
        match self.peek() {
            Some(Tok::Int(_)) => Ok(Value::Int(self.int("an element")?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let mut items = vec![self.value()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    items.push(self.value()?);
                }
                self.expect_tok(Tok::RParen, "`,` or `)` in a tuple element")?;
                if items.len() < 2 {
                    return Err(SyntaxError {
                        span: self.here(),
                        message: "tuple elements need at least two coordinates".into(),
                    });
                }
                Ok(Value::Tuple(items))
            }
            _ => Err(self.err("an element (integer or tuple)")),
        }
    }

    fn value_set(&mut self) -> Result<Vec<Value>, SyntaxError> {
        self.expect_tok(Tok::LBrace, "`{`")?;
        let mut items = Vec::new();
        if self.peek() != Some(&Tok::RBrace) {
            items.push(self.value()?);
            while self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
                items.push(self.value()?);
            }
        }
        self.expect_tok(Tok::RBrace, "`,` or `}` in an element set")?;
        Ok(items)
    }

    fn name_list(&mut self) -> Result<Vec<String>, SyntaxError> {
        self.expect_tok(Tok::LParen, "`(`")?;
        let mut names = vec![self.name("a declared name")?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            names.push(self.name("a declared name")?);
        }
        self.expect_tok(Tok::RParen, "`,` or `)`")?;
        Ok(names)
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.err("end of line"))
        }
    }
}

pub fn parse(text: &str) -> Result<Document, SyntaxError> {
    let mut doc = Document::default();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = lex_line(raw_line, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let span = toks[0].span;
        let mut p = LineParser {
            toks,
            pos: 0,
            line: line_no,
            line_len: raw_line.chars().count(),
        };
        let head = p.name("`ring`, `module`, `set`, `sub`, or `query`")?;
        match head.as_str() {
            "ring" => {
                let name = p.name("a ring name")?;
                p.expect_tok(Tok::Eq, "`=`")?;
                let kind = p.name("`zmod`, `product`, `quotient`, or `idealization`")?;
                let rhs = match kind.as_str() {
                    "zmod" => RingRhs::Zmod(p.int("a modulus")?),
                    "product" => RingRhs::Product(p.name_list()?),
                    "quotient" => {
                        let names = p.name_list()?;
                        two(names, span, "quotient(RING, SUB)")
                            .map(|(a, b)| RingRhs::Quotient(a, b))?
                    }
                    "idealization" => {
                        let names = p.name_list()?;
                        two(names, span, "idealization(RING, MODULE)")
                            .map(|(a, b)| RingRhs::Idealization(a, b))?
                    }
                    other => {
                        return Err(SyntaxError {
                            span,
                            message: format!(
                                "expected `zmod`, `product`, `quotient`, or `idealization`, found `{other}`"
                            ),
                        })
                    }
                };
                p.finish()?;
                doc.decls.push(Decl::Ring { name, rhs, span });
            }
            "module" => {
                let name = p.name("a module name")?;
                p.expect_tok(Tok::Eq, "`=`")?;
                let kind = p.name("`regular`, `zmod`, `product`, `dsum`, or `quotient`")?;
                let rhs = match kind.as_str() {
                    "regular" => ModuleRhs::Regular(p.name("a ring name")?),
                    "zmod" => {
                        let d = p.int("a cyclic order")?;
                        p.expect_keyword("over")?;
                        ModuleRhs::ZmodOver(d, p.name("a ring name")?)
                    }
                    "product" => ModuleRhs::Product(p.name_list()?),
                    "dsum" => ModuleRhs::DirectSum(p.name_list()?),
                    "quotient" => {
                        let names = p.name_list()?;
                        two(names, span, "quotient(MODULE, SUB)")
                            .map(|(a, b)| ModuleRhs::Quotient(a, b))?
                    }
                    other => {
                        return Err(SyntaxError {
                            span,
                            message: format!(
                                "expected `regular`, `zmod`, `product`, `dsum`, or `quotient`, found `{other}`"
                            ),
                        })
                    }
                };
                p.finish()?;
                doc.decls.push(Decl::Module { name, rhs, span });
            }
            "set" => {
                let name = p.name("a set name")?;
                p.expect_keyword("in")?;
                let ring = p.name("a ring name")?;
                p.expect_tok(Tok::Eq, "`=`")?;
                let elems = p.value_set()?;
                p.finish()?;
                doc.decls.push(Decl::Set { name, ring, elems, span });
            }
            "sub" => {
                let name = p.name("a submodule name")?;
                p.expect_keyword("of")?;
                let module = p.name("a module name")?;
                p.expect_tok(Tok::Eq, "`=`")?;
                let generated = if let Some(Tok::Word(w)) = p.peek() {
                    if w == "gen" {
                        p.bump();
                        true
                    } else {
                        return Err(p.err("`gen` or `{`"));
                    }
                } else {
                    false
                };
                let elems = p.value_set()?;
                p.finish()?;
                doc.decls.push(Decl::Sub { name, module, generated, elems, span });
            }
            "query" => {
                let kind = p.name("`classify`, `s_primary`, `s_prime`, `suite`, or `search`")?;
                let query = match kind.as_str() {
                    "classify" => Query::Classify {
                        sub: p.name("a submodule name")?,
                        set: p.name("a set name")?,
                        span,
                    },
                    "s_primary" => Query::SPrimary {
                        sub: p.name("a submodule name")?,
                        set: p.name("a set name")?,
                        span,
                    },
                    "s_prime" => Query::SPrime {
                        sub: p.name("a submodule name")?,
                        set: p.name("a set name")?,
                        span,
                    },
                    "suite" => {
                        let property = p.name("a property name")?;
                        let (max_ring, max_module) = suite_bounds(&mut p)?;
                        Query::Suite { property, max_ring, max_module, span }
                    }
                    "search" => {
                        let target = p.name("a search target")?;
                        let (max_ring, max_module) = suite_bounds(&mut p)?;
                        if max_module.is_some() {
                            return Err(SyntaxError {
                                span,
                                message: "search accepts only maxring=N".into(),
                            });
                        }
                        Query::Search { target, max_ring, span }
                    }
                    other => {
                        return Err(SyntaxError {
                            span,
                            message: format!(
                                "expected `classify`, `s_primary`, `s_prime`, `suite`, or `search`, found `{other}`"
                            ),
                        })
                    }
                };
                p.finish()?;
                doc.queries.push(query);
            }
            other => {
                return Err(SyntaxError {
                    span,
                    message: format!(
                        "expected `ring`, `module`, `set`, `sub`, or `query`, found `{other}`"
                    ),
                })
            }
        }
    }
    resolve(&doc)?;
    Ok(doc)
}

fn two(names: Vec<String>, span: Span, form: &str) -> Result<(String, String), SyntaxError> {
    if names.len() == 2 {
        let mut it = names.into_iter();
        Ok((it.next().unwrap(), it.next().unwrap()))
    } else {
        Err(SyntaxError {
            span,
            message: format!("{form} takes exactly two names"),
        })
    }
}

fn suite_bounds(p: &mut LineParser) -> Result<(Option<usize>, Option<usize>), SyntaxError> {
    let mut max_ring = None;
    let mut max_module = None;
    while let Some(Tok::Word(w)) = p.peek() {
        let key = w.clone();
        let span = p.here();
        match key.as_str() {
            "maxring" | "maxmod" => {
                p.bump();
                p.expect_tok(Tok::Eq, "`=` after the bound name")?;
                let n = p.int("a bound")? as usize;
                if key == "maxring" {
                    max_ring = Some(n);
                } else {
                    max_module = Some(n);
                }
            }
            other => {
                return Err(SyntaxError {
                    span,
                    message: format!("expected `maxring=N` or `maxmod=N`, found `{other}`"),
                })
            }
        }
    }
    Ok((max_ring, max_module))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum NameKind {
    Ring,
    Module,
    Set,
    Sub,
}

impl fmt::Display for NameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NameKind::Ring => "ring",
            NameKind::Module => "module",
            NameKind::Set => "set",
            NameKind::Sub => "sub",
        };
        f.write_str(s)
    }
}

/// Declared-before-use, kind agreement, and known property/target names.
fn resolve(doc: &Document) -> Result<(), SyntaxError> {
    use std::collections::HashMap;
    let mut names: HashMap<&str, NameKind> = HashMap::new();
    let lookup = |names: &HashMap<&str, NameKind>,
                  name: &str,
                  want: NameKind,
                  span: Span|
     -> Result<(), SyntaxError> {
        match names.get(name) {
            Some(kind) if *kind == want => Ok(()),
            Some(kind) => Err(SyntaxError {
                span,
                message: format!("`{name}` is a {kind}, but a {want} is required here"),
            }),
            None => Err(SyntaxError {
                span,
                message: format!("`{name}` is not declared"),
            }),
        }
    };
    for decl in &doc.decls {
        let span = decl.span();
        match decl {
            Decl::Ring { rhs, .. } => match rhs {
                RingRhs::Zmod(_) => {}
                RingRhs::Product(comps) => {
                    for c in comps {
                        lookup(&names, c, NameKind::Ring, span)?;
                    }
                }
                RingRhs::Quotient(r, s) => {
                    lookup(&names, r, NameKind::Ring, span)?;
                    lookup(&names, s, NameKind::Sub, span)?;
                }
                RingRhs::Idealization(r, m) => {
                    lookup(&names, r, NameKind::Ring, span)?;
                    lookup(&names, m, NameKind::Module, span)?;
                }
            },
            Decl::Module { rhs, .. } => match rhs {
                ModuleRhs::Regular(r) | ModuleRhs::ZmodOver(_, r) => {
                    lookup(&names, r, NameKind::Ring, span)?;
                }
                ModuleRhs::Product(comps) | ModuleRhs::DirectSum(comps) => {
                    for c in comps {
                        lookup(&names, c, NameKind::Module, span)?;
                    }
                }
                ModuleRhs::Quotient(m, s) => {
                    lookup(&names, m, NameKind::Module, span)?;
                    lookup(&names, s, NameKind::Sub, span)?;
                }
            },
            Decl::Set { ring, .. } => lookup(&names, ring, NameKind::Ring, span)?,
            Decl::Sub { module, .. } => lookup(&names, module, NameKind::Module, span)?,
        }
        let kind = match decl {
            Decl::Ring { .. } => NameKind::Ring,
            Decl::Module { .. } => NameKind::Module,
            Decl::Set { .. } => NameKind::Set,
            Decl::Sub { .. } => NameKind::Sub,
        };
        if names.insert(decl.name(), kind).is_some() {
            return Err(SyntaxError {
                span,
                message: format!("`{}` is declared twice", decl.name()),
            });
        }
    }
    for query in &doc.queries {
        let span = query.span();
        match query {
            Query::Classify { sub, set, .. }
            | Query::SPrimary { sub, set, .. }
            | Query::SPrime { sub, set, .. } => {
                lookup(&names, sub, NameKind::Sub, span)?;
                lookup(&names, set, NameKind::Set, span)?;
            }
            Query::Suite { property, .. } => {
                if !property_names().contains(&property.as_str()) {
                    return Err(SyntaxError {
                        span,
                        message: format!(
                            "unknown property `{property}` (see `alg suite --list`)"
                        ),
                    });
                }
            }
            Query::Search { target, .. } => {
                if SearchTarget::parse(target).is_err() {
                    return Err(SyntaxError {
                        span,
                        message: format!(
                            "unknown search target `{target}` (expected one of {})",
                            SearchTarget::all().join(", ")
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

fn fmt_values(elems: &[Value]) -> String {
    let items: Vec<String> = elems.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Canonical source form; `parse(print(doc)) == doc`.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for decl in &doc.decls {
        let line = match decl {
            Decl::Ring { name, rhs, .. } => match rhs {
                RingRhs::Zmod(n) => format!("ring {name} = zmod {n}"),
                RingRhs::Product(c) => format!("ring {name} = product({})", c.join(", ")),
                RingRhs::Quotient(r, s) => format!("ring {name} = quotient({r}, {s})"),
                RingRhs::Idealization(r, m) => format!("ring {name} = idealization({r}, {m})"),
            },
            Decl::Module { name, rhs, .. } => match rhs {
                ModuleRhs::Regular(r) => format!("module {name} = regular {r}"),
                ModuleRhs::ZmodOver(d, r) => format!("module {name} = zmod {d} over {r}"),
                ModuleRhs::Product(c) => format!("module {name} = product({})", c.join(", ")),
                ModuleRhs::DirectSum(c) => format!("module {name} = dsum({})", c.join(", ")),
                ModuleRhs::Quotient(m, s) => format!("module {name} = quotient({m}, {s})"),
            },
            Decl::Set { name, ring, elems, .. } => {
                format!("set {name} in {ring} = {}", fmt_values(elems))
            }
            Decl::Sub { name, module, generated, elems, .. } => {
                let gen = if *generated { "gen " } else { "" };
                format!("sub {name} of {module} = {gen}{}", fmt_values(elems))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    for query in &doc.queries {
        let line = match query {
            Query::Classify { sub, set, .. } => format!("query classify {sub} {set}"),
            Query::SPrimary { sub, set, .. } => format!("query s_primary {sub} {set}"),
            Query::SPrime { sub, set, .. } => format!("query s_prime {sub} {set}"),
            Query::Suite { property, max_ring, max_module, .. } => {
                let mut line = format!("query suite {property}");
                if let Some(n) = max_ring {
                    line.push_str(&format!(" maxring={n}"));
                }
                if let Some(n) = max_module {
                    line.push_str(&format!(" maxmod={n}"));
                }
                line
            }
            Query::Search { target, max_ring, .. } => {
                let mut line = format!("query search {target}");
                if let Some(n) = max_ring {
                    line.push_str(&format!(" maxring={n}"));
                }
                line
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
