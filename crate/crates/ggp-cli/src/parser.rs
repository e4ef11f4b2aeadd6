//! Text input layer: cuspidal-label declarations, named bindings, and
//! expressions for representations, multisegments, segments, and
//! unitary (Speh-factor) products.
//!
//! Grammar (whitespace-insensitive inside expressions):
//!
//! ```text
//! session     := line*
//! line        := declaration | binding | blank          (# starts a comment)
//! declaration := "rho" ID "dim=" INT ["dual=" ID] ["unitary"]
//! binding     := ID "=" (rep | unitary)
//! rep         := "L(" multisegment ")" | "Z(" multisegment ")" | ID
//! multisegment:= "GL0" | segment ("+" segment)*
//! segment     := "[" rational "," rational "]" "@" ID
//! rational    := ["-"] INT ["/" INT]
//! unitary     := factor ("x" factor)* | ID
//! factor      := "speh(" ID ", u=" INT ", v=" INT [", alpha=" rational] ")"
//! ```
//!
//! `Z(...)` input is converted to Langlands data on entry, so printing
//! any parsed value yields the canonical `L(...)` form.

use std::collections::BTreeMap;
use std::fmt;

use ggp_engine::rat::{self, Rat};
use ggp_engine::unitary::{SpehFactor, UnitaryRep};
use ggp_engine::{CuspidalLabel, IrrRep, Multisegment, Segment};

/// A position-annotated input error (syntax or semantic).
#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A named value in a session.
#[derive(Clone)]
pub enum Value {
    Rep(IrrRep),
    Unitary(UnitaryRep),
}

/// Declared labels and named bindings available to expressions.
#[derive(Clone, Default)]
pub struct Session {
    pub labels: BTreeMap<String, CuspidalLabel>,
    pub bindings: BTreeMap<String, Value>,
}

impl Session {
    pub fn new() -> Self {
        Session::default()
    }

    /// Parses a full session text (declarations and bindings), extending
    /// `self` line by line.
    pub fn extend_from_text(&mut self, text: &str, first_line: usize) -> Result<(), ParseError> {
        for (i, raw) in text.lines().enumerate() {
            let lineno = first_line + i;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            self.parse_line(line, lineno)?;
        }
        Ok(())
    }

    /// Parses one declaration or binding line.
    pub fn parse_line(&mut self, line: &str, lineno: usize) -> Result<(), ParseError> {
        let mut sc = Scanner::new(line, lineno);
        sc.skip_ws();
        let start = sc.pos;
        let word = sc.ident()?;
        if word == "rho" {
            self.parse_declaration(&mut sc)
        } else {
            sc.skip_ws();
            if !sc.eat('=') {
                return Err(sc.err("expected `=` after binding name"));
            }
            let value = parse_value(&mut sc, self)?;
            sc.expect_end()?;
            let _ = start;
            self.bindings.insert(word, value);
            Ok(())
        }
    }

    fn parse_declaration(&mut self, sc: &mut Scanner) -> Result<(), ParseError> {
        sc.skip_ws();
        let id_col = sc.col();
        let id = sc.ident()?;
        let mut dim: Option<u32> = None;
        let mut dual: Option<String> = None;
        let mut unitary = false;
        loop {
            sc.skip_ws();
            if sc.at_end() {
                break;
            }
            let key = sc.ident()?;
            match key.as_str() {
                "dim" => {
                    sc.skip_ws();
                    if !sc.eat('=') {
                        return Err(sc.err("expected `=` after `dim`"));
                    }
                    sc.skip_ws();
                    let n = sc.integer()?;
                    if n <= 0 {
                        return Err(sc.err("dim must be a positive integer"));
                    }
                    dim = Some(n as u32);
                }
                "dual" => {
                    sc.skip_ws();
                    if !sc.eat('=') {
                        return Err(sc.err("expected `=` after `dual`"));
                    }
                    sc.skip_ws();
                    dual = Some(sc.ident()?);
                }
                "unitary" => unitary = true,
                other => {
                    return Err(sc.err(&format!("unknown declaration attribute `{other}`")))
                }
            }
        }
        let dim = dim.ok_or_else(|| sc.err("declaration is missing `dim=`"))?;
        if self.labels.contains_key(&id) {
            return Err(ParseError {
                line: sc.line,
                col: id_col,
                message: format!("duplicate declaration of label `{id}`"),
            });
        }
        let dual_id = dual.unwrap_or_else(|| id.clone());
        self.labels
            .insert(id.clone(), CuspidalLabel::new(&id, dim, &dual_id, unitary));
        Ok(())
    }

    pub fn label(&self, id: &str, sc: &Scanner, col: usize) -> Result<CuspidalLabel, ParseError> {
        self.labels.get(id).cloned().ok_or(ParseError {
            line: sc.line,
            col,
            message: format!("undeclared label `{id}`"),
        })
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Character scanner with line/column tracking (expressions are
/// single-line, so the column is the offset into the line).
pub struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Scanner {
    pub fn new(text: &str, line: usize) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    pub fn err(&self, message: &str) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col(),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let mut s = String::new();
        match self.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => {}
            _ => return Err(self.err("expected an identifier")),
        }
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(s)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let mut s = String::new();
        if self.peek() == Some('-') {
            s.push('-');
            self.pos += 1;
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.err("expected an integer"));
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s.parse::<i64>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        self.skip_ws();
        let p = self.integer()?;
        if self.eat('/') {
            let q = self.integer()?;
            if q == 0 {
                return Err(self.err("zero denominator"));
            }
            Ok(rat::rat(p, q))
        } else {
            Ok(rat::int(p))
        }
    }

    /// True when the next non-whitespace characters begin `prefix`.
    fn looking_at(&mut self, prefix: &str) -> bool {
        self.skip_ws();
        self.chars[self.pos..]
            .iter()
            .zip(prefix.chars())
            .filter(|(a, b)| **a == *b)
            .count()
            == prefix.chars().count()
    }
}

fn parse_segment(sc: &mut Scanner, session: &Session) -> Result<Segment, ParseError> {
    sc.skip_ws();
    sc.expect('[')?;
    let a = sc.rational()?;
    sc.skip_ws();
    sc.expect(',')?;
    let b = sc.rational()?;
    sc.skip_ws();
    sc.expect(']')?;
    sc.skip_ws();
    sc.expect('@')?;
    let col = sc.col();
    let id = sc.ident()?;
    let label = session.label(&id, sc, col)?;
    Segment::new(label, a, b).map_err(|_| ParseError {
        line: sc.line,
        col,
        message: "b - a must be a non-negative integer".to_string(),
    })
}

pub fn parse_multisegment(sc: &mut Scanner, session: &Session) -> Result<Multisegment, ParseError> {
    sc.skip_ws();
    if sc.looking_at("GL0") {
        for _ in 0..3 {
            sc.bump();
        }
        return Ok(Multisegment::empty());
    }
    let mut segs = vec![parse_segment(sc, session)?];
    loop {
        sc.skip_ws();
        if sc.eat('+') {
            segs.push(parse_segment(sc, session)?);
        } else {
            break;
        }
    }
    Ok(Multisegment::new(segs))
}

pub fn parse_rep(sc: &mut Scanner, session: &Session) -> Result<IrrRep, ParseError> {
    sc.skip_ws();
    if sc.looking_at("L(") || sc.looking_at("Z(") {
        let kind = sc.bump().unwrap();
        sc.expect('(')?;
        let m = parse_multisegment(sc, session)?;
        sc.skip_ws();
        sc.expect(')')?;
        return Ok(if kind == 'L' {
            IrrRep::langlands(m)
        } else {
            IrrRep::zelevinsky(m)
        });
    }
    let col = sc.col();
    let id = sc.ident()?;
    match session.bindings.get(&id) {
        Some(Value::Rep(r)) => Ok(r.clone()),
        Some(Value::Unitary(u)) => Ok(u.rep()),
        None => Err(ParseError {
            line: sc.line,
            col,
            message: format!("unknown binding `{id}`"),
        }),
    }
}

fn parse_factor(sc: &mut Scanner, session: &Session) -> Result<SpehFactor, ParseError> {
    sc.skip_ws();
    let kw = sc.ident()?;
    if kw != "speh" {
        return Err(sc.err("expected `speh(...)`"));
    }
    sc.skip_ws();
    sc.expect('(')?;
    sc.skip_ws();
    let col = sc.col();
    let id = sc.ident()?;
    let label = session.label(&id, sc, col)?;
    let mut u: Option<i64> = None;
    let mut v: Option<i64> = None;
    let mut alpha = rat::int(0);
    loop {
        sc.skip_ws();
        if sc.eat(')') {
            break;
        }
        sc.expect(',')?;
        sc.skip_ws();
        let key = sc.ident()?;
        sc.skip_ws();
        sc.expect('=')?;
        sc.skip_ws();
        match key.as_str() {
            "u" => u = Some(sc.integer()?),
            "v" => v = Some(sc.integer()?),
            "alpha" => alpha = sc.rational()?,
            other => return Err(sc.err(&format!("unknown factor parameter `{other}`"))),
        }
    }
    let u = u.ok_or_else(|| sc.err("factor is missing `u=`"))?;
    let v = v.ok_or_else(|| sc.err("factor is missing `v=`"))?;
    if u <= 0 || v <= 0 {
        return Err(sc.err("factor parameters u, v must be positive"));
    }
    SpehFactor::new(label, u as u32, v as u32, alpha).map_err(|e| sc.err(&e.to_string()))
}

pub fn parse_unitary(sc: &mut Scanner, session: &Session) -> Result<UnitaryRep, ParseError> {
    sc.skip_ws();
    if !sc.looking_at("speh") {
        let col = sc.col();
        let id = sc.ident()?;
        return match session.bindings.get(&id) {
            Some(Value::Unitary(u)) => Ok(u.clone()),
            Some(Value::Rep(_)) => Err(ParseError {
                line: sc.line,
                col,
                message: format!("binding `{id}` is not a unitary product"),
            }),
            None => Err(ParseError {
                line: sc.line,
                col,
                message: format!("unknown binding `{id}`"),
            }),
        };
    }
    let mut factors = vec![parse_factor(sc, session)?];
    loop {
        sc.skip_ws();
        if sc.eat('x') {
            factors.push(parse_factor(sc, session)?);
        } else {
            break;
        }
    }
    Ok(UnitaryRep::new(factors))
}

fn parse_value(sc: &mut Scanner, session: &Session) -> Result<Value, ParseError> {
    sc.skip_ws();
    if sc.looking_at("speh") {
        Ok(Value::Unitary(parse_unitary(sc, session)?))
    } else {
        Ok(Value::Rep(parse_rep(sc, session)?))
    }
}

/// Parses a whole string as a representation expression.
pub fn rep_from_str(s: &str, session: &Session) -> Result<IrrRep, ParseError> {
    let mut sc = Scanner::new(s, 1);
    let r = parse_rep(&mut sc, session)?;
    sc.expect_end()?;
    Ok(r)
}

/// Parses a whole string as a multisegment.
pub fn multisegment_from_str(s: &str, session: &Session) -> Result<Multisegment, ParseError> {
    let mut sc = Scanner::new(s, 1);
    let m = parse_multisegment(&mut sc, session)?;
    sc.expect_end()?;
    Ok(m)
}

/// Parses a whole string as a single segment.
pub fn segment_from_str(s: &str, session: &Session) -> Result<Segment, ParseError> {
    let mut sc = Scanner::new(s, 1);
    let d = parse_segment(&mut sc, session)?;
    sc.expect_end()?;
    Ok(d)
}

/// Parses a whole string as a unitary product.
pub fn unitary_from_str(s: &str, session: &Session) -> Result<UnitaryRep, ParseError> {
    let mut sc = Scanner::new(s, 1);
    let u = parse_unitary(&mut sc, session)?;
    sc.expect_end()?;
    Ok(u)
}

/// Parses a whole string as an exact rational.
pub fn rational_from_str(s: &str) -> Result<Rat, ParseError> {
    let mut sc = Scanner::new(s, 1);
    let x = sc.rational()?;
    sc.expect_end()?;
    Ok(x)
}
