//! Concrete formula syntax.
//!
//! ```text
//! formula := disj
//! disj    := conj { "\/" conj }
//! conj    := atomf { "/\" atomf }
//! atomf   := "(" formula ")" | "~" atomf | poly rel poly
//! rel     := ">" | ">=" | "=" | "<" | "<=" | "!="
//! poly    := ["-"] term { ("+" | "-") term }
//! term    := [rational] ["*"] "x" ["^" nat] | rational
//! ```
//!
//! `p rel q` becomes `(p − q) rel 0`. The Unicode forms `−`, `∧`, `∨`, `¬`,
//! `≥`, `≤`, `≠` are accepted as synonyms.

use std::fmt;

use bkr_core::{Poly, RawFormula, Rational, Rel};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Not,
    And,
    Or,
    Rel(Rel),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::X => "`x`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Rel(r) => format!("`{}`", r.symbol()),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let next = chars.peek().map(|&(_, c)| c);
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = at + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                Tok::Int(src[at..end].parse().unwrap())
            }
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '~' | '¬' => Tok::Not,
            '∧' => Tok::And,
            '∨' => Tok::Or,
            '≥' => Tok::Rel(Rel::Geq),
            '≤' => Tok::Rel(Rel::Leq),
            '≠' => Tok::Rel(Rel::Neq),
            '/' if next == Some('\\') => {
                chars.next();
                Tok::And
            }
            '/' => Tok::Slash,
            '\\' if next == Some('/') => {
                chars.next();
                Tok::Or
            }
            '>' | '<' if next == Some('=') => {
                chars.next();
                Tok::Rel(if c == '>' { Rel::Geq } else { Rel::Leq })
            }
            '>' => Tok::Rel(Rel::Gt),
            '<' => Tok::Rel(Rel::Lt),
            '=' => Tok::Rel(Rel::Eq),
            '!' if next == Some('=') => {
                chars.next();
                Tok::Rel(Rel::Neq)
            }
            other => {
                return Err(ParseError {
                    offset: at,
                    expected: vec!["a formula token"],
                    found: format!("`{other}`"),
                })
            }
        };
        out.push((at, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            expected: expected.to_vec(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn disj(&mut self) -> Result<RawFormula, ParseError> {
        let mut f = self.conj()?;
        while self.eat(&Tok::Or) {
            f = RawFormula::or(f, self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<RawFormula, ParseError> {
        let mut f = self.atomf()?;
        while self.eat(&Tok::And) {
            f = RawFormula::and(f, self.atomf()?);
        }
        Ok(f)
    }

    fn atomf(&mut self) -> Result<RawFormula, ParseError> {
        match self.peek() {
            Tok::LParen => {
                self.bump();
                let f = self.disj()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Not => {
                self.bump();
                Ok(RawFormula::not(self.atomf()?))
            }
            Tok::Int(_) | Tok::X | Tok::Minus => {
                let lhs = self.poly()?;
                let rel = match *self.peek() {
                    Tok::Rel(r) => r,
                    _ => return Err(self.error(&["`+`", "`-`", "`>`", "`>=`", "`=`", "`<`", "`<=`", "`!=`"])),
                };
                self.bump();
                let rhs = self.poly()?;
                Ok(RawFormula::atom(&lhs - &rhs, rel))
            }
            _ => Err(self.error(&["`(`", "`~`", "`-`", "integer", "`x`"])),
        }
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut negative = self.eat(&Tok::Minus);
        let mut sum = Poly::zero();
        loop {
            let term = self.term()?;
            sum = if negative { &sum - &term } else { &sum + &term };
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(sum),
            };
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let coeff = match self.peek() {
            Tok::Int(_) => Some(self.rational()?),
            Tok::X => None,
            _ => return Err(self.error(&["integer", "`x`"])),
        };
        let has_star = coeff.is_some() && self.eat(&Tok::Star);
        if self.peek() != &Tok::X {
            if has_star {
                return Err(self.error(&["`x`"]));
            }
            return Ok(Poly::constant(coeff.unwrap()));
        }
        self.bump();
        let exp = if self.eat(&Tok::Caret) {
            let exp = match self.peek() {
                Tok::Int(n) => usize::try_from(n).ok(),
                _ => None,
            };
            let exp = exp.ok_or_else(|| self.error(&["natural exponent"]))?;
            self.bump();
            exp
        } else {
            1
        };
        Ok(Poly::monomial(coeff.unwrap_or_else(Rational::one), exp))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let Tok::Int(num) = self.bump() else { unreachable!() };
        if !self.eat(&Tok::Slash) {
            return Ok(Rational::from_integer(num));
        }
        match self.peek().clone() {
            Tok::Int(den) if !den.is_zero() => {
                self.bump();
                Ok(Rational::new(num, den))
            }
            _ => Err(self.error(&["positive integer"])),
        }
    }
}

/// Parses a formula in the concrete syntax.
pub fn parse_formula(src: &str) -> Result<RawFormula, ParseError> {
    let mut parser = Parser { toks: lex(src)?, pos: 0 };
    let f = parser.disj()?;
    match parser.peek() {
        Tok::End => Ok(f),
        _ => Err(parser.error(&["`/\\`", "`\\/`", "end of input"])),
    }
}

/// Parses a single polynomial such as `3*x^2 - 1/2`.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let mut parser = Parser { toks: lex(src)?, pos: 0 };
    let p = parser.poly()?;
    match parser.peek() {
        Tok::End => Ok(p),
        _ => Err(parser.error(&["`+`", "`-`", "end of input"])),
    }
}

/// Prints a formula so that [`parse_formula`] reads back the same tree.
pub fn print_formula(f: &RawFormula) -> String {
    let mut out = String::new();
    write_formula(f, &mut out);
    out
}

fn write_formula(f: &RawFormula, out: &mut String) {
    match f {
        RawFormula::Atom(p, rel) => {
            out.push_str(&format!("{p} {} 0", rel.symbol()));
        }
        RawFormula::Not(a) => {
            out.push('~');
            write_operand(a, out);
        }
        RawFormula::And(a, b) => {
            write_operand(a, out);
            out.push_str(" /\\ ");
            write_operand(b, out);
        }
        RawFormula::Or(a, b) => {
            write_operand(a, out);
            out.push_str(" \\/ ");
            write_operand(b, out);
        }
    }
}

fn write_operand(f: &RawFormula, out: &mut String) {
    if matches!(f, RawFormula::Atom(..)) {
        write_formula(f, out);
    } else {
        out.push('(');
        write_formula(f, out);
        out.push(')');
    }
}
