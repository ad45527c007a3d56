//! Text format for ring elements.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ['^' exponent]
//! exponent := ['-'] integer | '(' ['-'] integer ['/' positive-integer] ')'
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Whitespace may separate tokens. Multiplication is always explicit, so
//! `xy` is a single (probably unknown) variable name.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPolynomial, ELIMINATION_VARIABLE};
use crate::order::MonomialOrder;
use crate::poly::{Exponent, Poly, Polynomial};
use crate::posy::Posynomial;
use crate::rational::{self, Rational};

/// Which exponents a context admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// Nonnegative integers.
    Polynomial,
    /// Integers.
    Laurent,
    /// Rationals.
    PosyQ,
}

impl RingKind {
    fn admits(self, e: &Rational) -> bool {
        match self {
            RingKind::Polynomial => e.is_integer() && !e.is_negative(),
            RingKind::Laurent => e.is_integer(),
            RingKind::PosyQ => true,
        }
    }

    /// The stricter of two kinds.
    fn meet(self, other: RingKind) -> RingKind {
        use RingKind::*;
        match (self, other) {
            (Polynomial, _) | (_, Polynomial) => Polynomial,
            (Laurent, _) | (_, Laurent) => Laurent,
            _ => PosyQ,
        }
    }

    fn name(self) -> &'static str {
        match self {
            RingKind::Polynomial => "polynomial",
            RingKind::Laurent => "Laurent",
            RingKind::PosyQ => "posynomial",
        }
    }
}

/// Variable names, in lex order (first is smallest), and the ring kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    order: MonomialOrder,
    kind: RingKind,
}

fn valid_name(v: &str) -> bool {
    let mut chars = v.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

impl RingContext {
    pub fn new<I, S>(variables: I, kind: RingKind) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let order = MonomialOrder::lex(variables)?;
        for v in order.variables() {
            if v == ELIMINATION_VARIABLE {
                return Err(Error::InvalidVariables(format!("`{v}` is reserved")));
            }
            if !valid_name(v) {
                return Err(Error::InvalidVariables(format!("`{v}` is not a valid variable name")));
            }
        }
        Ok(RingContext { order, kind })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn variables(&self) -> &[String] {
        self.order.variables()
    }

    pub fn arity(&self) -> usize {
        self.order.arity()
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn with_kind(&self, kind: RingKind) -> Self {
        RingContext { order: self.order.clone(), kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedEnd,
    UnexpectedChar(char),
    ExpectedFactor,
    ExpectedExponent,
    UnknownVariable(String),
    InadmissibleExponent { exponent: String, ring: &'static str },
    DivisionByZero,
    ExponentOverflow,
}

/// Parse failure at byte offset `position` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: ", self.position)?;
        match &self.kind {
            ParseErrorKind::EmptyInput => f.write_str("empty expression"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::ExpectedFactor => f.write_str("expected a number or a variable"),
            ParseErrorKind::ExpectedExponent => f.write_str("expected an exponent"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::InadmissibleExponent { exponent, ring } => {
                write!(f, "exponent {exponent} is not allowed in a {ring} ring")
            }
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::ExponentOverflow => f.write_str("exponent out of range"),
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError { position: self.pos, kind })
    }

    fn unexpected<T>(&mut self) -> PResult<T> {
        match self.peek() {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some(_) => {
                // Report the full character, not a lone UTF-8 byte.
                let rest = std::str::from_utf8(&self.src[self.pos..]).ok();
                let c = rest.and_then(|s| s.chars().next()).unwrap_or('\u{FFFD}');
                self.err(ParseErrorKind::UnexpectedChar(c))
            }
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> PResult<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.unexpected()
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Some(digits.parse().unwrap())
    }

    fn require_integer(&mut self) -> PResult<BigInt> {
        match self.integer() {
            Some(n) => Ok(n),
            None => self.unexpected(),
        }
    }

    /// `integer ['/' positive-integer]`, numerator already read.
    fn fraction(&mut self, num: BigInt) -> PResult<Rational> {
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.skip_ws();
        let at = self.pos;
        let den = self.require_integer()?;
        if den.is_zero() {
            return Err(ParseError { position: at, kind: ParseErrorKind::DivisionByZero });
        }
        Ok(Rational::new(num, den))
    }

    fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        } else {
            None
        }
    }

    fn exponent(&mut self) -> PResult<Rational> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let num = self.require_integer()?;
            let e = self.fraction(if neg { -num } else { num })?;
            self.expect(b')')?;
            return Ok(e);
        }
        let neg = self.eat(b'-');
        match self.integer() {
            Some(n) => Ok(Rational::from_integer(if neg { -n } else { n })),
            None if self.peek().is_none() => self.err(ParseErrorKind::UnexpectedEnd),
            None => self.err(ParseErrorKind::ExpectedExponent),
        }
    }
}

type RawTerm = (Vec<Rational>, Rational);

struct Parser<'a, 'c> {
    cur: Cursor<'a>,
    vars: &'c [String],
    kind: RingKind,
}

impl Parser<'_, '_> {
    fn factor(&mut self, exps: &mut [Rational], coeff: &mut Rational) -> PResult<()> {
        if let Some(n) = self.cur.integer() {
            *coeff *= self.cur.fraction(n)?;
            return Ok(());
        }
        let start = self.cur.pos;
        let Some(name) = self.cur.identifier() else {
            return match self.cur.peek() {
                None => self.cur.err(ParseErrorKind::UnexpectedEnd),
                Some(_) => self.cur.err(ParseErrorKind::ExpectedFactor),
            };
        };
        let Some(index) = self.vars.iter().position(|v| v == name) else {
            return Err(ParseError { position: start, kind: ParseErrorKind::UnknownVariable(name.to_string()) });
        };
        let e = if self.cur.eat(b'^') {
            self.cur.skip_ws();
            let at = self.cur.pos;
            let e = self.cur.exponent()?;
            if !self.kind.admits(&e) {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::InadmissibleExponent {
                        exponent: rational::to_string(&e),
                        ring: self.kind.name(),
                    },
                });
            }
            e
        } else {
            Rational::one()
        };
        exps[index] += e;
        Ok(())
    }

    fn term(&mut self, sign: bool) -> PResult<RawTerm> {
        let mut exps = vec![Rational::zero(); self.vars.len()];
        let mut coeff = if sign { -Rational::one() } else { Rational::one() };
        self.factor(&mut exps, &mut coeff)?;
        while self.cur.eat(b'*') {
            self.factor(&mut exps, &mut coeff)?;
        }
        Ok((exps, coeff))
    }

    fn expr(&mut self) -> PResult<Vec<(usize, RawTerm)>> {
        if self.cur.peek().is_none() {
            return self.cur.err(ParseErrorKind::EmptyInput);
        }
        let mut terms = Vec::new();
        let mut neg = self.cur.eat(b'-');
        loop {
            self.cur.skip_ws();
            let at = self.cur.pos;
            terms.push((at, self.term(neg)?));
            match self.cur.peek() {
                None => break,
                Some(b'+') => neg = false,
                Some(b'-') => neg = true,
                Some(_) => return self.cur.unexpected(),
            }
            self.cur.pos += 1;
        }
        Ok(terms)
    }
}

fn parse_raw(text: &str, ctx: &RingContext, kind: RingKind) -> PResult<Vec<(usize, RawTerm)>> {
    let mut p = Parser { cur: Cursor { src: text.as_bytes(), pos: 0 }, vars: ctx.variables(), kind };
    p.expr()
}

/// Merges like terms; returns the position of the first term per monomial
/// so conversion errors can point somewhere sensible.
fn collect<E: Exponent>(
    arity: usize,
    raw: Vec<(usize, RawTerm)>,
    convert: impl Fn(&Rational) -> Option<E>,
) -> PResult<Poly<E>> {
    let mut terms: BTreeMap<Vec<E>, Rational> = BTreeMap::new();
    for (at, (exps, c)) in raw {
        let mut out = Vec::with_capacity(arity);
        for e in &exps {
            match convert(e) {
                Some(v) => out.push(v),
                None => return Err(ParseError { position: at, kind: ParseErrorKind::ExponentOverflow }),
            }
        }
        *terms.entry(out).or_insert_with(Rational::zero) += c;
    }
    Ok(Poly::from_terms(arity, terms).expect("exponent vectors have the context arity"))
}

/// Parses a posynomial, rejecting exponents outside the context's ring kind.
pub fn parse(text: &str, ctx: &RingContext) -> PResult<Posynomial> {
    let raw = parse_raw(text, ctx, ctx.kind)?;
    collect(ctx.arity(), raw, |e| Some(e.clone()))
}

/// Parses into `Q[x, x^-1]`; fractional exponents are rejected whatever the
/// context kind.
pub fn parse_laurent(text: &str, ctx: &RingContext) -> PResult<LaurentPolynomial> {
    let raw = parse_raw(text, ctx, ctx.kind.meet(RingKind::Laurent))?;
    collect(ctx.arity(), raw, |e| e.to_integer().to_i64())
}

/// Parses into `Q[x]`; only nonnegative integer exponents are accepted.
pub fn parse_polynomial(text: &str, ctx: &RingContext) -> PResult<Polynomial> {
    let raw = parse_raw(text, ctx, RingKind::Polynomial)?;
    collect(ctx.arity(), raw, |e| e.to_integer().to_u32())
}

/// Identifiers in order of first appearance, ignoring everything else.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    while cur.pos < cur.src.len() {
        match cur.identifier() {
            Some(id) => {
                if !out.iter().any(|v| v == id) {
                    out.push(id.to_string());
                }
            }
            None => {
                // Skip digits wholesale so `2x1` style noise does not yield `x1`
                // halfway through a number; other bytes one at a time.
                if cur.integer().is_none() && cur.pos < cur.src.len() {
                    cur.pos += 1;
                }
            }
        }
    }
    out
}

/// Canonical text with the context's variable names.
pub fn format<E: Exponent>(f: &Poly<E>, ctx: &RingContext) -> String {
    format_with_names(f, ctx.variables())
}

/// Canonical text: descending term order, unit coefficients omitted,
/// variables in declaration order, fractional or negative-fraction
/// exponents parenthesised. Parses back to the same value.
///
/// Panics if `names` is shorter than the arity of `f`.
pub fn format_with_names<E: Exponent>(f: &Poly<E>, names: &[String]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let c = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !c.is_one() || m.is_one() {
            factors.push(rational::to_string(&c));
        }
        for (name, e) in names.iter().zip(m.exponents()) {
            let e = e.to_rational();
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                factors.push(name.clone());
            } else if e.is_integer() {
                factors.push(format!("{name}^{e}"));
            } else {
                factors.push(format!("{name}^({})", rational::to_string(&e)));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
