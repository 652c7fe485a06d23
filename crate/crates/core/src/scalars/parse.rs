//! Text grammar for scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 't' | '(' expr ')'
//! ```
//!
//! This covers `INT`, `INT/INT`, and fractions of polynomials such as
//! `(2*t-1)/(t+3)`. The indeterminate `t` is only valid over ℚ(t).
//! Whitespace is ignored.

use num_bigint::BigInt;

use super::{Domain, Scalar};
use crate::error::{Error, Result};

pub fn parse_scalar(text: &str, domain: Domain) -> Result<Scalar> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        domain,
        end: text.len(),
    };
    let value = parser.expr()?;
    if let Some((pos, tok)) = parser.tokens.get(parser.pos) {
        return Err(parse_error(*pos, format!("unexpected {tok:?}")));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                Tok::Int(text[i..end].parse().expect("digits"))
            }
            't' => Tok::T,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(parse_error(i, format!("unexpected character `{other}`"))),
        };
        out.push((i, tok));
    }
    if out.is_empty() {
        return Err(parse_error(0, "empty scalar"));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    domain: Domain,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.position();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|e| match e {
                        Error::DivisionByZero => Error::DivisionByZero,
                        other => parse_error(at, other.to_string()),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.position();
        match self.tokens.get(self.pos) {
            Some((_, Tok::Int(n))) => {
                let exp: u32 = n
                    .try_into()
                    .map_err(|_| parse_error(at, "exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(exp))
            }
            _ => Err(parse_error(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        let at = self.position();
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(parse_error(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(self.domain.integer(&n)),
            Tok::T => self.domain.indeterminate().ok_or_else(|| {
                parse_error(at, format!("`t` is not an element of {}", self.domain))
            }),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(parse_error(self.position(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(parse_error(at, format!("unexpected {other:?}"))),
        }
    }
}
