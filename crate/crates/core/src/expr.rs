//! Expression trees over elective symbols.

use std::fmt;
use std::ops;

use crate::error::Result;
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolList};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Rational),
    Sym(Symbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Quot(Box<Expr>, Box<Expr>),
    /// `e'`, read as `1 - e`.
    Compl(Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Const(Rational::integer(n))
    }

    pub fn zero() -> Self {
        Expr::int(0)
    }

    pub fn one() -> Self {
        Expr::int(1)
    }

    /// Panics on an invalid name; use [`Symbol::new`] for untrusted input.
    pub fn sym(name: &str) -> Self {
        Expr::Sym(Symbol::new(name).expect("invalid symbol name"))
    }

    pub fn compl(self) -> Self {
        Expr::Compl(Box::new(self))
    }

    pub fn quot(self, rhs: Expr) -> Self {
        Expr::Quot(Box::new(self), Box::new(rhs))
    }

    pub fn pow(self, k: u32) -> Self {
        assert!(k >= 1, "exponent must be positive");
        let mut out = self.clone();
        for _ in 1..k {
            out = out * self.clone();
        }
        out
    }

    /// Free symbols in order of first occurrence, reading left to right.
    pub fn free_symbols(&self) -> SymbolList {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        SymbolList::from_distinct(out)
    }

    pub(crate) fn collect_symbols(&self, out: &mut Vec<Symbol>) {
        match self {
            Expr::Const(_) => {}
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Quot(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Expr::Compl(a) => a.collect_symbols(out),
        }
    }

    pub fn mentions(&self, symbol: &Symbol) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Sym(s) => s == symbol,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Quot(a, b) => {
                a.mentions(symbol) || b.mentions(symbol)
            }
            Expr::Compl(a) => a.mentions(symbol),
        }
    }

    pub fn is_division_free(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Sym(_) => true,
            Expr::Quot(..) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.is_division_free() && b.is_division_free()
            }
            Expr::Compl(a) => a.is_division_free(),
        }
    }

    /// Replaces every occurrence of `symbol` by the constant `value`.
    pub fn substitute(&self, symbol: &Symbol, value: Rational) -> Expr {
        match self {
            Expr::Sym(s) if s == symbol => Expr::Const(value),
            Expr::Const(_) | Expr::Sym(_) => self.clone(),
            Expr::Add(a, b) => a.substitute(symbol, value) + b.substitute(symbol, value),
            Expr::Sub(a, b) => a.substitute(symbol, value) - b.substitute(symbol, value),
            Expr::Mul(a, b) => a.substitute(symbol, value) * b.substitute(symbol, value),
            Expr::Quot(a, b) => a
                .substitute(symbol, value)
                .quot(b.substitute(symbol, value)),
            Expr::Compl(a) => a.substitute(symbol, value).compl(),
        }
    }

    /// Rewrites every `e'` as `1 - e`.
    pub fn desugar_complements(&self) -> Expr {
        match self {
            Expr::Const(_) | Expr::Sym(_) => self.clone(),
            Expr::Add(a, b) => a.desugar_complements() + b.desugar_complements(),
            Expr::Sub(a, b) => a.desugar_complements() - b.desugar_complements(),
            Expr::Mul(a, b) => a.desugar_complements() * b.desugar_complements(),
            Expr::Quot(a, b) => a.desugar_complements().quot(b.desugar_complements()),
            Expr::Compl(a) => Expr::one() - a.desugar_complements(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Sym(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Quot(a, b) => {
                1 + a.node_count() + b.node_count()
            }
            Expr::Compl(a) => 1 + a.node_count(),
        }
    }
}

impl From<Symbol> for Expr {
    fn from(s: Symbol) -> Self {
        Expr::Sym(s)
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Self {
        Expr::int(n)
    }
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        self.quot(rhs)
    }
}

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::zero() - self
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::format_expr(self))
    }
}

/// `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Equation {
    pub fn new(lhs: Expr, rhs: Expr) -> Self {
        Equation { lhs, rhs }
    }

    /// `lhs - rhs`, the `f` of `f = 0`.
    pub fn homogeneous_form(&self) -> Expr {
        self.lhs.clone() - self.rhs.clone()
    }

    pub fn free_symbols(&self) -> SymbolList {
        let mut out = Vec::new();
        self.lhs.collect_symbols(&mut out);
        self.rhs.collect_symbols(&mut out);
        SymbolList::from_distinct(out)
    }

    pub fn mentions(&self, symbol: &Symbol) -> bool {
        self.lhs.mentions(symbol) || self.rhs.mentions(symbol)
    }

    pub fn is_division_free(&self) -> bool {
        self.lhs.is_division_free() && self.rhs.is_division_free()
    }

    pub fn parse(text: &str) -> std::result::Result<Self, crate::parser::ParseError> {
        crate::parser::parse_equation(text)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Convenience for building a [`SymbolList`] from names known to be valid.
pub fn symbols(names: &[&str]) -> Result<SymbolList> {
    SymbolList::new(
        names
            .iter()
            .map(|n| Symbol::new(n))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_symbols_in_first_occurrence_order() {
        let e = Expr::sym("x") * Expr::sym("w") - Expr::sym("y") + Expr::sym("x");
        assert_eq!(e.free_symbols().to_string(), "x,w,y");
        let eq = Equation::new(Expr::sym("z"), e);
        assert_eq!(eq.free_symbols().to_string(), "z,x,w,y");
    }

    #[test]
    fn substitution_and_division() {
        let w = Symbol::new("w").unwrap();
        let e = Expr::sym("x") * Expr::sym("w");
        assert_eq!(
            e.substitute(&w, Rational::ONE),
            Expr::sym("x") * Expr::one()
        );
        assert!(e.is_division_free());
        assert!(!(Expr::sym("y") / Expr::sym("x")).is_division_free());
    }

    #[test]
    fn complement_desugars_to_one_minus() {
        let e = Expr::sym("x").compl().compl();
        assert_eq!(
            e.desugar_complements(),
            Expr::one() - (Expr::one() - Expr::sym("x"))
        );
    }
}
