//! Line-oriented specification files.
//!
//! ```text
//! space I points 5 interval 0 1
//! algebra A sampled I gens s=coord hinge 0.5 degcap 4
//! poly alpha over A monic 2 coeff 0 -s
//! extend ah B base A polys alpha
//! cmd characters B
//! ```
//!
//! Blank lines and text after `#` are ignored. Element expressions are
//! single tokens built from numbers, `i`, generator names, `coord`,
//! `[v1,v2,...]` value lists and `@ext` / `@ext.var` roots, combined with
//! `+ - * ^` and parentheses.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{parse_err, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SpecDocument {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statement {
    pub line: usize,
    pub kind: StatementKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StatementKind {
    Space {
        name: String,
        count: usize,
        layout: Layout,
    },
    Algebra {
        name: String,
        def: AlgebraDef,
    },
    Poly {
        name: String,
        over: String,
        degree: usize,
        coeffs: Vec<(usize, Expr)>,
    },
    Extend {
        kind: ExtendKind,
        name: String,
        base: String,
        polys: Vec<String>,
        t: Option<Vec<f64>>,
        degcap: Option<usize>,
    },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Layout {
    /// Unlabelled abstract points `p0, p1, …`.
    Abstract,
    Circle { radius: f64 },
    Interval { a: f64, b: f64 },
    /// `k × k` grid on `[-1, 1]²`, `count = k²`.
    Grid,
    /// Half the points on the circle of radius `r`, the rest on radius `r/2`.
    Disk { radius: f64 },
    List(Vec<Complex64>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraDef {
    Functions { space: String },
    Sampled {
        space: String,
        gens: Vec<GenSpec>,
        degcap: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub name: String,
    pub kind: GenKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    Const(Complex64),
    /// `coord^k`.
    Coord(u32),
    /// `max(Re z − c, 0)`.
    Hinge(f64),
    Values(Vec<Complex64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendKind {
    Ah,
    Standard,
    Narmania,
    Cole,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Characters(String),
    Properties(String),
    Compare { base: String, polys: Vec<String> },
    /// Characters of an extension by `x² − coord` against `{λ² = s}`.
    Parabola(String),
    ColeIdentities(String),
    Expect(Expectation),
    Gallery,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expectation {
    Semisimple(String, bool),
    Separable(String, bool),
    Characters(String, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Complex64),
    List(Vec<Complex64>),
    Ident(String),
    Root { ext: String, var: Option<String> },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Value of an expression made only of numbers.
    pub fn constant(&self) -> Option<Complex64> {
        Some(match self {
            Expr::Num(z) => *z,
            Expr::Add(a, b) => a.constant()? + b.constant()?,
            Expr::Sub(a, b) => a.constant()? - b.constant()?,
            Expr::Mul(a, b) => a.constant()? * b.constant()?,
            Expr::Neg(a) => -a.constant()?,
            Expr::Pow(a, k) => a.constant()?.powu(*k),
            _ => return None,
        })
    }

    fn roots(&self, out: &mut Vec<String>) {
        match self {
            Expr::Root { ext, .. } => out.push(ext.clone()),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.roots(out);
                b.roots(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.roots(out),
            _ => {}
        }
    }
}

pub fn parse_expr(text: &str, line: usize) -> Result<Expr> {
    let tokens = tokenize(text, line)?;
    let mut p = ExprParser { tokens, pos: 0, line };
    let e = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(parse_err(line, format!("trailing input in expression `{text}`")));
    }
    Ok(e)
}

pub fn parse_constant(text: &str, line: usize) -> Result<Complex64> {
    parse_expr(text, line)?
        .constant()
        .ok_or_else(|| parse_err(line, format!("`{text}` is not a constant")))
}

fn parse_real(text: &str, line: usize) -> Result<f64> {
    text.parse()
        .map_err(|_| parse_err(line, format!("`{text}` is not a real number")))
}

fn parse_count(text: &str, line: usize) -> Result<usize> {
    text.parse()
        .map_err(|_| parse_err(line, format!("`{text}` is not a non-negative integer")))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Imag(f64),
    Ident(String),
    Root(String),
    List(Vec<Complex64>),
    Op(char),
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_ascii_digit() || ch == '.' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_digit()
                    || chars[i] == '.'
                    || ((chars[i] == 'e' || chars[i] == 'E')
                        && i + 1 < chars.len()
                        && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '-' || chars[i + 1] == '+'))
                    || ((chars[i] == '-' || chars[i] == '+') && matches!(chars[i - 1], 'e' | 'E')))
            {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = parse_real(&s, line)?;
            if i < chars.len() && chars[i] == 'i' && !chars.get(i + 1).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                out.push(Tok::Imag(v));
                i += 1;
            } else {
                out.push(Tok::Num(v));
            }
        } else if ch.is_alphabetic() || ch == '_' || ch == '@' {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || (ch == '@' && chars[i] == '.')) {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            if let Some(r) = s.strip_prefix('@') {
                if r.is_empty() {
                    return Err(parse_err(line, "empty `@` reference"));
                }
                out.push(Tok::Root(r.to_string()));
            } else if s == "i" {
                out.push(Tok::Imag(1.0));
            } else {
                out.push(Tok::Ident(s));
            }
        } else if ch == '[' {
            let end = chars[i..]
                .iter()
                .position(|&c| c == ']')
                .ok_or_else(|| parse_err(line, "unclosed `[`"))?
                + i;
            let body: String = chars[i + 1..end].iter().collect();
            let values = body
                .split(',')
                .map(|v| parse_constant(v.trim(), line))
                .collect::<Result<_>>()?;
            out.push(Tok::List(values));
            i = end + 1;
        } else if "+-*^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(parse_err(line, format!("unexpected character `{ch}` in expression")));
        }
    }
    if out.is_empty() {
        return Err(parse_err(line, "empty expression"));
    }
    Ok(out)
}

struct ExprParser {
    tokens: Vec<Tok>,
    pos: usize,
    line: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos) {
                Some(Tok::Num(k)) if k.fract() == 0.0 && *k >= 0.0 => {
                    let k = *k as u32;
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return Err(parse_err(self.line, "exponent must be a non-negative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| parse_err(self.line, "expression ends early"))?;
        self.pos += 1;
        Ok(match tok {
            Tok::Num(v) => Expr::Num(Complex64::new(v, 0.0)),
            Tok::Imag(v) => Expr::Num(Complex64::new(0.0, v)),
            Tok::Ident(s) => Expr::Ident(s),
            Tok::List(v) => Expr::List(v),
            Tok::Root(r) => match r.split_once('.') {
                Some((ext, var)) => Expr::Root {
                    ext: ext.to_string(),
                    var: Some(var.to_string()),
                },
                None => Expr::Root { ext: r, var: None },
            },
            Tok::Op('(') => {
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(parse_err(self.line, "missing `)`"));
                }
                e
            }
            Tok::Op(op) => return Err(parse_err(self.line, format!("unexpected `{op}`"))),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Space,
    Algebra,
    Poly,
}

struct Names {
    kinds: HashMap<String, (Kind, usize)>,
}

impl Names {
    fn declare(&mut self, name: &str, kind: Kind, line: usize) -> Result<()> {
        if !name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
        {
            return Err(parse_err(line, format!("`{name}` is not a valid name")));
        }
        if let Some((_, first)) = self.kinds.get(name) {
            return Err(parse_err(line, format!("`{name}` already declared on line {first}")));
        }
        self.kinds.insert(name.to_string(), (kind, line));
        Ok(())
    }

    fn require(&self, name: &str, kind: Kind, line: usize) -> Result<()> {
        let what = match kind {
            Kind::Space => "space",
            Kind::Algebra => "algebra",
            Kind::Poly => "polynomial",
        };
        match self.kinds.get(name) {
            Some((k, _)) if *k == kind => Ok(()),
            Some(_) => Err(parse_err(line, format!("`{name}` is not a {what}"))),
            None => Err(parse_err(line, format!("unknown {what} `{name}`"))),
        }
    }
}

/// Parse and validate a specification document. Every name must be declared
/// before use, so the dependency graph is acyclic by construction.
pub fn parse_spec(text: &str) -> Result<SpecDocument> {
    let mut names = Names {
        kinds: HashMap::new(),
    };
    let mut statements = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        let kind = match words[0] {
            "space" => parse_space(&words, line, &mut names)?,
            "algebra" => parse_algebra(&words, line, &mut names)?,
            "poly" => parse_poly(&words, line, &mut names)?,
            "extend" => parse_extend(&words, line, &mut names)?,
            "cmd" => StatementKind::Command(parse_command(&words, line, &names)?),
            other => return Err(parse_err(line, format!("unknown statement `{other}`"))),
        };
        statements.push(Statement { line, kind });
    }
    Ok(SpecDocument { statements })
}

fn expect_word(words: &[&str], i: usize, word: &str, line: usize) -> Result<()> {
    match words.get(i) {
        Some(w) if *w == word => Ok(()),
        Some(w) => Err(parse_err(line, format!("expected `{word}`, found `{w}`"))),
        None => Err(parse_err(line, format!("expected `{word}`"))),
    }
}

fn word<'a>(words: &[&'a str], i: usize, what: &str, line: usize) -> Result<&'a str> {
    words
        .get(i)
        .copied()
        .ok_or_else(|| parse_err(line, format!("missing {what}")))
}

fn parse_space(words: &[&str], line: usize, names: &mut Names) -> Result<StatementKind> {
    let name = word(words, 1, "space name", line)?;
    expect_word(words, 2, "points", line)?;
    let count = parse_count(word(words, 3, "point count", line)?, line)?;
    if count == 0 {
        return Err(parse_err(line, "a space needs at least one point"));
    }
    let rest = &words[4..];
    let real_or = |i: usize, default: f64| -> Result<f64> {
        rest.get(i).map_or(Ok(default), |w| parse_real(w, line))
    };
    let (layout, used) = match rest.first().copied() {
        None => (Layout::Abstract, 0),
        Some("circle") => (Layout::Circle { radius: real_or(1, 1.0)? }, 2),
        Some("disk") => (Layout::Disk { radius: real_or(1, 1.0)? }, 2),
        Some("interval") => (
            Layout::Interval {
                a: real_or(1, 0.0)?,
                b: real_or(2, 1.0)?,
            },
            3,
        ),
        Some("grid") => {
            let k = (count as f64).sqrt().round() as usize;
            if k * k != count {
                return Err(parse_err(line, format!("grid needs a square point count, got {count}")));
            }
            (Layout::Grid, 1)
        }
        Some("list") => {
            let values = rest[1..]
                .iter()
                .map(|w| parse_constant(w, line))
                .collect::<Result<Vec<_>>>()?;
            if values.len() != count {
                return Err(parse_err(
                    line,
                    format!("list has {} values for {count} points", values.len()),
                ));
            }
            (Layout::List(values), rest.len())
        }
        Some(other) => return Err(parse_err(line, format!("unknown point layout `{other}`"))),
    };
    if rest.len() > used {
        return Err(parse_err(line, format!("unexpected `{}`", rest[used])));
    }
    names.declare(name, Kind::Space, line)?;
    Ok(StatementKind::Space {
        name: name.to_string(),
        count,
        layout,
    })
}

fn parse_algebra(words: &[&str], line: usize, names: &mut Names) -> Result<StatementKind> {
    let name = word(words, 1, "algebra name", line)?;
    let kind = word(words, 2, "algebra kind", line)?;
    let space = word(words, 3, "space", line)?;
    names.require(space, Kind::Space, line)?;
    let def = match kind {
        "fnalg" => {
            if words.len() > 4 {
                return Err(parse_err(line, format!("unexpected `{}`", words[4])));
            }
            AlgebraDef::Functions {
                space: space.to_string(),
            }
        }
        "sampled" => {
            expect_word(words, 4, "gens", line)?;
            let mut gens = Vec::new();
            let mut degcap = None;
            let mut i = 5;
            while i < words.len() {
                if words[i] == "degcap" {
                    degcap = Some(parse_count(word(words, i + 1, "degree cap", line)?, line)?);
                    i += 2;
                    continue;
                }
                let (label, head) = match words[i].split_once('=') {
                    Some((l, h)) => (Some(l.to_string()), h),
                    None => (None, words[i]),
                };
                let (kind, default, step) = parse_gen(head, words.get(i + 1).copied(), line, gens.len())?;
                gens.push(GenSpec {
                    name: label.unwrap_or(default),
                    kind,
                });
                i += step;
            }
            AlgebraDef::Sampled {
                space: space.to_string(),
                gens,
                degcap,
            }
        }
        other => return Err(parse_err(line, format!("unknown algebra kind `{other}`"))),
    };
    names.declare(name, Kind::Algebra, line)?;
    Ok(StatementKind::Algebra {
        name: name.to_string(),
        def,
    })
}

fn parse_gen(head: &str, next: Option<&str>, line: usize, index: usize) -> Result<(GenKind, String, usize)> {
    let arg = || next.ok_or_else(|| parse_err(line, format!("`{head}` needs an argument")));
    Ok(match head {
        "const" => {
            let a = arg()?;
            (GenKind::Const(parse_constant(a, line)?), format!("const({a})"), 2)
        }
        "hinge" => {
            let a = arg()?;
            (GenKind::Hinge(parse_real(a, line)?), format!("hinge({a})"), 2)
        }
        "coord" => (GenKind::Coord(1), "z".to_string(), 1),
        h if h.starts_with("coord^") => {
            let k: u32 = h[6..]
                .parse()
                .map_err(|_| parse_err(line, format!("bad power in `{h}`")))?;
            (GenKind::Coord(k), format!("z^{k}"), 1)
        }
        h if h.starts_with('[') => match parse_expr(h, line)? {
            Expr::List(v) => (GenKind::Values(v), format!("g{index}"), 1),
            _ => return Err(parse_err(line, format!("bad value list `{h}`"))),
        },
        other => return Err(parse_err(line, format!("unknown generator `{other}`"))),
    })
}

fn parse_poly(words: &[&str], line: usize, names: &mut Names) -> Result<StatementKind> {
    let name = word(words, 1, "polynomial name", line)?;
    expect_word(words, 2, "over", line)?;
    let over = word(words, 3, "coefficient algebra", line)?;
    names.require(over, Kind::Algebra, line)?;
    expect_word(words, 4, "monic", line)?;
    let degree = parse_count(word(words, 5, "degree", line)?, line)?;
    if degree == 0 {
        return Err(parse_err(line, "degree must be at least 1"));
    }
    let mut coeffs: Vec<(usize, Expr)> = Vec::new();
    let mut i = 6;
    while i < words.len() {
        expect_word(words, i, "coeff", line)?;
        let k = parse_count(word(words, i + 1, "coefficient index", line)?, line)?;
        if k >= degree {
            return Err(parse_err(line, format!("coefficient index {k} is not below the degree {degree}")));
        }
        if coeffs.iter().any(|(j, _)| *j == k) {
            return Err(parse_err(line, format!("coefficient {k} given twice")));
        }
        let e = parse_expr(word(words, i + 2, "coefficient expression", line)?, line)?;
        let mut refs = Vec::new();
        e.roots(&mut refs);
        for r in refs {
            names.require(&r, Kind::Algebra, line)?;
        }
        coeffs.push((k, e));
        i += 3;
    }
    names.declare(name, Kind::Poly, line)?;
    Ok(StatementKind::Poly {
        name: name.to_string(),
        over: over.to_string(),
        degree,
        coeffs,
    })
}

fn parse_extend(words: &[&str], line: usize, names: &mut Names) -> Result<StatementKind> {
    let kind = match word(words, 1, "extension kind", line)? {
        "ah" => ExtendKind::Ah,
        "standard" => ExtendKind::Standard,
        "narmania" => ExtendKind::Narmania,
        "cole" => ExtendKind::Cole,
        other => return Err(parse_err(line, format!("unknown extension kind `{other}`"))),
    };
    let name = word(words, 2, "extension name", line)?;
    expect_word(words, 3, "base", line)?;
    let base = word(words, 4, "base algebra", line)?;
    names.require(base, Kind::Algebra, line)?;
    expect_word(words, 5, "polys", line)?;
    let mut i = 6;
    let mut polys = Vec::new();
    while i < words.len() && words[i] != "t" && words[i] != "degcap" {
        names.require(words[i], Kind::Poly, line)?;
        polys.push(words[i].to_string());
        i += 1;
    }
    let mut t = None;
    let mut degcap = None;
    while i < words.len() {
        match words[i] {
            "t" => {
                let values = words[i + 1..]
                    .iter()
                    .take_while(|w| **w != "degcap")
                    .map(|w| parse_real(w, line))
                    .collect::<Result<Vec<_>>>()?;
                i += 1 + values.len();
                t = Some(values);
            }
            "degcap" => {
                degcap = Some(parse_count(word(words, i + 1, "degree cap", line)?, line)?);
                i += 2;
            }
            other => return Err(parse_err(line, format!("unexpected `{other}`"))),
        }
    }
    if polys.is_empty() && kind != ExtendKind::Cole {
        return Err(parse_err(line, "extension needs at least one polynomial"));
    }
    if kind == ExtendKind::Ah && polys.len() != 1 {
        return Err(parse_err(line, "an Arens-Hoffman extension takes exactly one polynomial"));
    }
    if let Some(t) = &t {
        if t.len() != polys.len() {
            return Err(parse_err(line, format!("{} norm parameters for {} polynomials", t.len(), polys.len())));
        }
        if kind == ExtendKind::Cole {
            return Err(parse_err(line, "Cole extensions carry the sup norm, not `t`"));
        }
    }
    if degcap.is_some() && kind != ExtendKind::Cole {
        return Err(parse_err(line, "`degcap` applies to Cole extensions only"));
    }
    names.declare(name, Kind::Algebra, line)?;
    Ok(StatementKind::Extend {
        kind,
        name: name.to_string(),
        base: base.to_string(),
        polys,
        t,
        degcap,
    })
}

fn parse_bool(text: &str, line: usize) -> Result<bool> {
    match text {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(parse_err(line, format!("expected `true` or `false`, found `{other}`"))),
    }
}

fn parse_command(words: &[&str], line: usize, names: &Names) -> Result<Command> {
    let name = word(words, 1, "command", line)?;
    let alg = |i: usize| -> Result<String> {
        let a = word(words, i, "algebra", line)?;
        names.require(a, Kind::Algebra, line)?;
        Ok(a.to_string())
    };
    let arity = |n: usize| -> Result<()> {
        if words.len() != n {
            return Err(parse_err(line, format!("`{name}` takes {} argument(s)", n - 2)));
        }
        Ok(())
    };
    Ok(match name {
        "characters" => {
            arity(3)?;
            Command::Characters(alg(2)?)
        }
        "properties" => {
            arity(3)?;
            Command::Properties(alg(2)?)
        }
        "parabola" => {
            arity(3)?;
            Command::Parabola(alg(2)?)
        }
        "cole-identities" => {
            arity(3)?;
            Command::ColeIdentities(alg(2)?)
        }
        "compare" => {
            let base = alg(2)?;
            let polys: Vec<String> = words[3..].iter().map(|w| w.to_string()).collect();
            if polys.is_empty() {
                return Err(parse_err(line, "`compare` needs at least one polynomial"));
            }
            for p in &polys {
                names.require(p, Kind::Poly, line)?;
            }
            Command::Compare { base, polys }
        }
        "gallery" => {
            arity(2)?;
            Command::Gallery
        }
        "expect" => {
            arity(5)?;
            let target = alg(3)?;
            Command::Expect(match words[2] {
                "semisimple" => Expectation::Semisimple(target, parse_bool(words[4], line)?),
                "separable" => Expectation::Separable(target, parse_bool(words[4], line)?),
                "characters" => Expectation::Characters(target, parse_count(words[4], line)?),
                other => return Err(parse_err(line, format!("unknown expectation `{other}`"))),
            })
        }
        other => return Err(parse_err(line, format!("unknown command `{other}`"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let e = parse_expr("1+2i", 1).unwrap();
        assert_eq!(e.constant(), Some(Complex64::new(1.0, 2.0)));
        assert_eq!(parse_constant("-i", 1).unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_constant("2*(1-3)^2", 1).unwrap(), Complex64::new(8.0, 0.0));
        assert_eq!(parse_constant("1.5e-3", 1).unwrap(), Complex64::new(1.5e-3, 0.0));
        assert_eq!(
            parse_expr("-@B.x*s", 1).unwrap(),
            Expr::Mul(
                Box::new(Expr::Neg(Box::new(Expr::Root {
                    ext: "B".into(),
                    var: Some("x".into())
                }))),
                Box::new(Expr::Ident("s".into()))
            )
        );
        assert!(matches!(parse_expr("[1,2i,-3]", 1).unwrap(), Expr::List(v) if v.len() == 3));
        assert!(parse_expr("1+", 1).is_err());
        assert!(parse_expr("s^x", 1).is_err());
    }

    #[test]
    fn minimal_document() {
        let doc = parse_spec(
            "space pt points 1 list 0\nalgebra C fnalg pt\npoly alpha over C monic 2 coeff 0 -1\nextend ah B base C polys alpha\n",
        )
        .unwrap();
        assert_eq!(doc.statements.len(), 4);
    }

    #[test]
    fn undeclared_polynomial_is_named() {
        let err = parse_spec("space pt points 1\nalgebra C fnalg pt\nextend ah B base C polys beta\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("beta") && msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn generator_forms() {
        let doc = parse_spec("space I points 4 interval\nalgebra A sampled I gens s=coord coord^2 hinge 0.5 const 1 [1,2,3,4] degcap 3\n").unwrap();
        let StatementKind::Algebra { def: AlgebraDef::Sampled { gens, degcap, .. }, .. } = &doc.statements[1].kind else {
            panic!()
        };
        let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["s", "z^2", "hinge(0.5)", "const(1)", "g4"]);
        assert_eq!(*degcap, Some(3));
    }

    #[test]
    fn rejections() {
        assert!(parse_spec("space a points 3 grid\n").is_err());
        assert!(parse_spec("space a points 2 list 1\n").is_err());
        assert!(parse_spec("space a points 1\nspace a points 1\n").is_err());
        assert!(parse_spec("algebra A fnalg nowhere\n").is_err());
        assert!(parse_spec("space p points 1\nalgebra C fnalg p\npoly q over C monic 2 coeff 2 1\n").is_err());
        assert!(parse_spec("space p points 1\nalgebra C fnalg p\npoly q over C monic 2 coeff 0 @D\n").is_err());
        assert!(parse_spec("frobnicate\n").is_err());
    }
}
