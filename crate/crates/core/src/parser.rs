//! Recursive-descent parser for expressions and equations.
//!
//! ```text
//! equation = expr "=" expr ;
//! expr     = [ "-" ] term { ( "+" | "-" ) term } ;
//! term     = postfix { [ "*" | "/" ] postfix } ;   (* adjacency = "*" *)
//! postfix  = atom { "'" } ;
//! atom     = INTEGER | SYMBOL | "(" expr ")" ;
//! ```
//!
//! A leading minus directly on an integer literal gives a negative constant;
//! on anything else it gives `0 - term`. A postfix `'` builds a complement.

use std::fmt;

use thiserror::Error;

use crate::expr::{Equation, Expr};
use crate::rational::Rational;
use crate::symbol::Symbol;

const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input; equal to the input length at end of input.
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    Sym(&'a str),
    Plus,
    Minus,
    Star,
    Slash,
    Prime,
    LParen,
    RParen,
    Equals,
    End,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Prime => f.write_str("`'`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let simple = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'\'' => Some(Tok::Prime),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
        } else if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(&text[start..i])));
        } else if b.is_ascii_lowercase() {
            while i < bytes.len()
                && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
            {
                i += 1;
            }
            out.push((start, Tok::Sym(&text[start..i])));
        } else {
            let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
            return Err(ParseError {
                offset: start,
                expected: "expression token".into(),
                found: format!("{ch:?}"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok<'a> {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok<'a> {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_string(),
            found: self.peek().to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            let (t, bare) = self.term()?;
            match t {
                Expr::Const(k) if bare => {
                    Expr::Const(k.checked_neg().expect("literal negation is in range"))
                }
                t => Expr::zero() - t,
            }
        } else {
            self.term()?.0
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs + self.term()?.0;
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs - self.term()?.0;
                }
                _ => return Ok(lhs),
            }
        }
    }

    /// Also reports whether the term was a lone integer literal.
    fn term(&mut self) -> Result<(Expr, bool), ParseError> {
        let (mut lhs, mut bare) = self.postfix()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = lhs * self.postfix()?.0;
                }
                Tok::Slash => {
                    self.bump();
                    lhs = lhs.quot(self.postfix()?.0);
                }
                Tok::Int(_) | Tok::Sym(_) | Tok::LParen => {
                    lhs = lhs * self.postfix()?.0;
                }
                _ => return Ok((lhs, bare)),
            }
            bare = false;
        }
    }

    fn postfix(&mut self) -> Result<(Expr, bool), ParseError> {
        let (mut e, mut bare) = self.atom()?;
        while *self.peek() == Tok::Prime {
            self.bump();
            e = e.compl();
            bare = false;
        }
        Ok((e, bare))
    }

    fn atom(&mut self) -> Result<(Expr, bool), ParseError> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                let n: i64 = digits.parse().map_err(|_| ParseError {
                    offset: self.offset(),
                    expected: "integer literal within 64-bit range".into(),
                    found: format!("`{digits}`"),
                })?;
                self.bump();
                Ok((Expr::Const(Rational::integer(n)), true))
            }
            Tok::Sym(name) => {
                self.bump();
                Ok((Expr::Sym(Symbol::new_unchecked(name)), false))
            }
            Tok::LParen => {
                if self.depth >= MAX_DEPTH {
                    return Err(self.error("shallower nesting"));
                }
                self.bump();
                self.depth += 1;
                let e = self.expr()?;
                self.depth -= 1;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok((e, false))
            }
            _ => Err(self.error("expression")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error("operator or end of input"))
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_equation(text: &str) -> Result<Equation, ParseError> {
    let mut p = Parser::new(text)?;
    let lhs = p.expr()?;
    if *p.peek() != Tok::Equals {
        return Err(p.error("`=`"));
    }
    p.bump();
    let rhs = p.expr()?;
    p.finish()?;
    Ok(Equation::new(lhs, rhs))
}
