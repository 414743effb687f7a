//! Radical expressions: syntax tree, recursive descent parser and renderer.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | 'sqrt' '(' expr ')' | 'cbrt' '(' expr ')'
//!           | '(' expr ')' | '-' factor
//! rational := integer ('/' integer)?
//! ```
//!
//! Whitespace is ignored between tokens. Unary minus applies to a single
//! factor, so `-5*sqrt(2)` is `(-5)*sqrt(2)`.

use std::fmt;

use denest_core::{normalize_rational, Integer, Rational};
use num::Signed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalExpr {
    Lit(Rational),
    Neg(Box<RadicalExpr>),
    Add(Box<RadicalExpr>, Box<RadicalExpr>),
    Sub(Box<RadicalExpr>, Box<RadicalExpr>),
    Mul(Box<RadicalExpr>, Box<RadicalExpr>),
    Sqrt(Box<RadicalExpr>),
    Cbrt(Box<RadicalExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub fn parse_expression(text: &str) -> Result<RadicalExpr, ParseError> {
    let mut parser = Parser { src: text, pos: 0 };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("expected end of input"));
    }
    Ok(expr)
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { offset: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Consumes `-` or the Unicode minus sign.
    fn eat_minus(&mut self) -> bool {
        match self.peek() {
            Some(c @ ('-' | '\u{2212}')) => {
                self.pos += c.len_utf8();
                true
            }
            _ => false,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<RadicalExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = RadicalExpr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat_minus() {
                let rhs = self.term()?;
                lhs = RadicalExpr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<RadicalExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            lhs = RadicalExpr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<RadicalExpr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('-' | '\u{2212}') => {
                self.eat_minus();
                Ok(RadicalExpr::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self.rest().chars().take_while(char::is_ascii_alphanumeric).count();
                let name = &self.src[start..start + len];
                let wrap: fn(Box<RadicalExpr>) -> RadicalExpr = match name {
                    "sqrt" => RadicalExpr::Sqrt,
                    "cbrt" => RadicalExpr::Cbrt,
                    _ => return Err(self.error(&format!("unknown function '{name}'"))),
                };
                self.pos += len;
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(wrap(Box::new(inner)))
            }
            _ => Err(self.error("expected a number, 'sqrt', 'cbrt', '(' or '-'")),
        }
    }

    fn integer(&mut self) -> Result<Integer, ParseError> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let digits = &self.src[self.pos..self.pos + len];
        self.pos += len;
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<RadicalExpr, ParseError> {
        let num = self.integer()?;
        if !self.eat('/') {
            return Ok(RadicalExpr::Lit(Rational::from_integer(num)));
        }
        let den_at = {
            self.skip_ws();
            self.pos
        };
        let den = self.integer()?;
        normalize_rational(num, den)
            .map(RadicalExpr::Lit)
            .map_err(|_| ParseError { offset: den_at, message: "division by zero".into() })
    }
}

/// Operator precedence used when rendering: sums 0, products 1, factors 2.
fn level(e: &RadicalExpr) -> u8 {
    match e {
        RadicalExpr::Add(..) | RadicalExpr::Sub(..) => 0,
        RadicalExpr::Mul(..) => 1,
        _ => 2,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &RadicalExpr, min_level: u8) -> fmt::Result {
    if level(e) < min_level {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for RadicalExpr {
    /// Renders with the minimum parentheses needed to parse back to the same
    /// tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalExpr::Lit(q) if q.is_negative() => write!(f, "({q})"),
            RadicalExpr::Lit(q) => write!(f, "{q}"),
            RadicalExpr::Neg(x) => {
                write!(f, "-")?;
                write_at(f, x, 2)
            }
            RadicalExpr::Add(l, r) => {
                write_at(f, l, 0)?;
                write!(f, " + ")?;
                write_at(f, r, 1)
            }
            RadicalExpr::Sub(l, r) => {
                write_at(f, l, 0)?;
                write!(f, " - ")?;
                write_at(f, r, 1)
            }
            RadicalExpr::Mul(l, r) => {
                write_at(f, l, 1)?;
                write!(f, "*")?;
                write_at(f, r, 2)
            }
            RadicalExpr::Sqrt(x) => write!(f, "sqrt({x})"),
            RadicalExpr::Cbrt(x) => write!(f, "cbrt({x})"),
        }
    }
}
