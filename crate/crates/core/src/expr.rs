//! Color expression syntax tree, parser and canonical printer.
//!
//! ```text
//! expr      = extended | standard ;
//! standard  = { "-" } , atom , { "!" percent , [ "!" atom ] } ;
//! atom      = name | "." | series ;
//! series    = name , "!!" , ( "+" , { "+" } | "[" integer "]" ) ;
//! extended  = model , [ "," decimal ] , ":" , term , { ";" term } ;
//! term      = standard , "," , decimal ;
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{ColorError, Result};
use crate::model::Model;

#[derive(Debug, Clone, PartialEq)]
pub enum ColorExpr {
    Standard(StandardExpr),
    Extended(ExtendedExpr),
}

/// `-…-head!p1!a1!p2!a2…`
#[derive(Debug, Clone, PartialEq)]
pub struct StandardExpr {
    pub minus_count: u32,
    pub head: Atom,
    pub chain: Vec<MixStep>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixStep {
    pub percent: f64,
    pub with: MixOperand,
}

/// Right-hand side of a mix step. A trailing bare `!p` mixes with white.
#[derive(Debug, Clone, PartialEq)]
pub enum MixOperand {
    Atom(Atom),
    White,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Atom {
    Name(String),
    /// `.`
    Current,
    Series {
        name: String,
        access: SeriesAccess,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesAccess {
    /// `name!!++…`, one step per `+`.
    Advance(u32),
    /// `name!![k]`
    Index(u32),
}

/// `model[,div]:term;term;…`
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedExpr {
    pub model: Model,
    pub divisor: Option<f64>,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub expr: StandardExpr,
    pub weight: f64,
}

impl StandardExpr {
    pub fn name(name: impl Into<String>) -> Self {
        StandardExpr {
            minus_count: 0,
            head: Atom::Name(name.into()),
            chain: Vec::new(),
        }
    }
}

impl ColorExpr {
    pub fn name(name: impl Into<String>) -> Self {
        ColorExpr::Standard(StandardExpr::name(name))
    }

    pub fn has_series_access(&self) -> bool {
        fn atom(a: &Atom) -> bool {
            matches!(a, Atom::Series { .. })
        }
        fn standard(s: &StandardExpr) -> bool {
            atom(&s.head)
                || s.chain
                    .iter()
                    .any(|step| matches!(&step.with, MixOperand::Atom(a) if atom(a)))
        }
        match self {
            ColorExpr::Standard(s) => standard(s),
            ColorExpr::Extended(e) => e.terms.iter().any(|t| standard(&t.expr)),
        }
    }
}

/// True for names accepted by the expression language and the registry.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(char::is_alphanumeric)
}

pub fn parse_expr(text: &str) -> Result<ColorExpr> {
    Parser::new(text).expr()
}

/// Canonical text for `expr`; equivalent to `expr.to_string()`.
pub fn unparse(expr: &ColorExpr) -> String {
    expr.to_string()
}

impl FromStr for ColorExpr {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

/// Positions in errors are character offsets into the input.
struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> ColorError {
        match self.peek() {
            Some(c) => ColorError::parse(self.pos, format!("expected {wanted}, found `{c}`")),
            None => ColorError::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<ColorExpr> {
        if self.chars.is_empty() {
            return Err(ColorError::parse(0, "empty expression"));
        }
        // An extended expression starts with a model name directly followed
        // by `,` or `:`, neither of which can follow a name in a standard one.
        let start = self.pos;
        let word = self.name_run();
        let expr = if !word.is_empty() && matches!(self.peek(), Some(',') | Some(':')) {
            let model: Model = word
                .parse()
                .map_err(|_| ColorError::parse(start, format!("unknown color model `{word}`")))?;
            ColorExpr::Extended(self.extended(model)?)
        } else {
            self.pos = start;
            ColorExpr::Standard(self.standard()?)
        };
        if self.pos < self.chars.len() {
            return Err(self.unexpected("end of expression"));
        }
        Ok(expr)
    }

    fn extended(&mut self, model: Model) -> Result<ExtendedExpr> {
        let divisor = if self.eat(',') {
            Some(self.decimal("divisor")?)
        } else {
            None
        };
        self.expect(':')?;
        let mut terms = Vec::new();
        loop {
            if self.peek().is_none() {
                return Err(ColorError::parse(
                    self.pos,
                    if terms.is_empty() {
                        "empty extended term list"
                    } else {
                        "expected a term after `;`"
                    },
                ));
            }
            let expr = self.standard()?;
            self.expect(',')?;
            let weight = self.decimal("weight")?;
            terms.push(Term { expr, weight });
            if !self.eat(';') {
                break;
            }
        }
        Ok(ExtendedExpr {
            model,
            divisor,
            terms,
        })
    }

    fn standard(&mut self) -> Result<StandardExpr> {
        let mut minus_count: u32 = 0;
        while self.eat('-') {
            minus_count = minus_count
                .checked_add(1)
                .ok_or_else(|| ColorError::parse(self.pos, "too many `-` signs"))?;
        }
        let head = self.atom()?;
        let mut chain = Vec::new();
        while self.peek() == Some('!') {
            self.pos += 1;
            let percent = self.percent()?;
            let with = if self.eat('!') {
                MixOperand::Atom(self.atom()?)
            } else {
                MixOperand::White
            };
            chain.push(MixStep { percent, with });
        }
        Ok(StandardExpr {
            minus_count,
            head,
            chain,
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat('.') {
            return Ok(Atom::Current);
        }
        let name = self.name_run();
        if name.is_empty() {
            return Err(self.unexpected("a color name or `.`"));
        }
        if self.peek() == Some('!') && self.peek_at(1) == Some('!') {
            self.pos += 2;
            let access = self.series_access()?;
            return Ok(Atom::Series { name, access });
        }
        Ok(Atom::Name(name))
    }

    fn series_access(&mut self) -> Result<SeriesAccess> {
        if self.peek() == Some('+') {
            let mut n: u32 = 0;
            while self.eat('+') {
                n = n
                    .checked_add(1)
                    .ok_or_else(|| ColorError::parse(self.pos, "too many `+` signs"))?;
            }
            return Ok(SeriesAccess::Advance(n));
        }
        if self.eat('[') {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.unexpected("a series index"));
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let k = digits.parse().map_err(|_| {
                ColorError::parse(start, format!("series index {digits} too large"))
            })?;
            self.expect(']')?;
            return Ok(SeriesAccess::Index(k));
        }
        match self.peek() {
            None => Err(ColorError::parse(
                self.pos,
                "dangling series operator `!!` (expected `+` or `[k]`)",
            )),
            Some(_) => Err(self.unexpected("`+` or `[k]` after `!!`")),
        }
    }

    fn name_run(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(char::is_alphanumeric) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn decimal(&mut self, what: &str) -> Result<f64> {
        let start = self.pos;
        let mut digits = 0;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            digits += 1;
        }
        let fraction_follows = self.peek_at(1).is_some_and(|c| c.is_ascii_digit());
        if self.peek() == Some('.') && (digits > 0 || fraction_follows) {
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            self.pos = start;
            return Err(self.unexpected(&format!("a decimal {what}")));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value: f64 = text
            .parse()
            .map_err(|_| ColorError::parse(start, format!("bad {what} `{text}`")))?;
        if !value.is_finite() {
            return Err(ColorError::parse(
                start,
                format!("{what} `{text}` is too large"),
            ));
        }
        Ok(value)
    }

    fn percent(&mut self) -> Result<f64> {
        let start = self.pos;
        if self.peek().is_none() {
            return Err(ColorError::parse(
                self.pos,
                "dangling `!` (expected a percentage)",
            ));
        }
        let p = self.decimal("percentage")?;
        if p > 100.0 {
            return Err(ColorError::parse(
                start,
                format!("percentage {p} outside [0, 100]"),
            ));
        }
        Ok(p)
    }
}

impl fmt::Display for ColorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorExpr::Standard(s) => s.fmt(f),
            ColorExpr::Extended(e) => e.fmt(f),
        }
    }
}

impl fmt::Display for StandardExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.minus_count {
            f.write_str("-")?;
        }
        self.head.fmt(f)?;
        for step in &self.chain {
            write!(f, "!{}", step.percent)?;
            if let MixOperand::Atom(a) = &step.with {
                write!(f, "!{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Name(n) => f.write_str(n),
            Atom::Current => f.write_str("."),
            Atom::Series { name, access } => match access {
                SeriesAccess::Advance(n) => write!(f, "{name}!!{}", "+".repeat(*n as usize)),
                SeriesAccess::Index(k) => write!(f, "{name}!![{k}]"),
            },
        }
    }
}

impl fmt::Display for ExtendedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.model.name())?;
        if let Some(d) = self.divisor {
            write!(f, ",{d}")?;
        }
        f.write_str(":")?;
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", term.expr, term.weight)?;
        }
        Ok(())
    }
}
