//! Development of expressions into constituent normal form.
//!
//! Every expression over idempotent symbols is determined by its values at
//! the `2^n` vertices of `{0,1}^n`, and the coefficient of each constituent
//! is the value at that constituent's vertex. Expansion is therefore plain
//! pointwise evaluation: the index law, commutativity and distributivity all
//! hold at every vertex, so no rewriting is needed.

use std::fmt;

use crate::constituent::{self, Constituent};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::expr::Expr;
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolList};

/// A developed coefficient. `Indeterminate` (0/0) and `Infinite` (k/0) only
/// come out of evaluating a quotient and may not be fed into further
/// arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtCoeff {
    Finite(Rational),
    Indeterminate,
    /// `k/0` with `k != 0`.
    Infinite(Rational),
}

impl ExtCoeff {
    pub const ZERO: ExtCoeff = ExtCoeff::Finite(Rational::ZERO);
    pub const ONE: ExtCoeff = ExtCoeff::Finite(Rational::ONE);

    pub fn finite(self) -> Option<Rational> {
        match self {
            ExtCoeff::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtCoeff::Finite(_))
    }

    /// 0 or 1.
    pub fn is_class_valued(self) -> bool {
        matches!(self, ExtCoeff::Finite(r) if r.is_zero() || r.is_one())
    }

    fn operand(self) -> Result<Rational> {
        self.finite().ok_or_else(Error::nesting)
    }
}

impl From<Rational> for ExtCoeff {
    fn from(r: Rational) -> Self {
        ExtCoeff::Finite(r)
    }
}

/// `2`, `-1`, `1/2`, `0/0`, `1/0`; see [`crate::format`] for the
/// parenthesised form used inside developed sums.
impl fmt::Display for ExtCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCoeff::Finite(r) => write!(f, "{r}"),
            ExtCoeff::Indeterminate => f.write_str("0/0"),
            ExtCoeff::Infinite(k) if k.is_integer() => write!(f, "{k}/0"),
            ExtCoeff::Infinite(k) => write!(f, "({k})/0"),
        }
    }
}

/// A total assignment of 0/1 to the symbols of a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    symbols: SymbolList,
    point: Constituent,
}

impl Vertex {
    pub fn new(symbols: SymbolList, point: Constituent) -> Self {
        Vertex { symbols, point }
    }

    pub fn from_pairs(pairs: &[(&str, bool)]) -> Result<Self> {
        let mut syms = Vec::with_capacity(pairs.len());
        let mut mask = 0u32;
        for (i, (name, value)) in pairs.iter().enumerate() {
            syms.push(Symbol::new(name)?);
            if *value {
                mask |= 1 << i;
            }
        }
        let symbols = SymbolList::new(syms)?;
        symbols.check_limit()?;
        Ok(Vertex::new(symbols, Constituent::from_mask(mask)))
    }
}

/// Expression tree with symbols resolved to positions in a symbol list.
#[derive(Debug)]
enum Compiled {
    Const(Rational),
    Var(usize),
    Add(Box<Compiled>, Box<Compiled>),
    Sub(Box<Compiled>, Box<Compiled>),
    Mul(Box<Compiled>, Box<Compiled>),
    Quot(Box<Compiled>, Box<Compiled>),
    Compl(Box<Compiled>),
}

impl Compiled {
    fn new(e: &Expr, symbols: &SymbolList) -> Result<Self> {
        let bin = |a: &Expr, b: &Expr| -> Result<(Box<Compiled>, Box<Compiled>)> {
            Ok((
                Box::new(Compiled::new(a, symbols)?),
                Box::new(Compiled::new(b, symbols)?),
            ))
        };
        Ok(match e {
            Expr::Const(r) => Compiled::Const(*r),
            Expr::Sym(s) => Compiled::Var(
                symbols
                    .index_of(s)
                    .ok_or_else(|| Error::UnboundSymbol(s.to_string()))?,
            ),
            Expr::Add(a, b) => {
                let (a, b) = bin(a, b)?;
                Compiled::Add(a, b)
            }
            Expr::Sub(a, b) => {
                let (a, b) = bin(a, b)?;
                Compiled::Sub(a, b)
            }
            Expr::Mul(a, b) => {
                let (a, b) = bin(a, b)?;
                Compiled::Mul(a, b)
            }
            Expr::Quot(a, b) => {
                let (a, b) = bin(a, b)?;
                Compiled::Quot(a, b)
            }
            Expr::Compl(a) => Compiled::Compl(Box::new(Compiled::new(a, symbols)?)),
        })
    }

    fn eval(&self, at: Constituent) -> Result<ExtCoeff> {
        let finite = |r: Rational| Ok(ExtCoeff::Finite(r));
        match self {
            Compiled::Const(r) => finite(*r),
            Compiled::Var(i) => finite(at.value(*i)),
            Compiled::Add(a, b) => {
                finite(a.eval(at)?.operand()?.checked_add(b.eval(at)?.operand()?)?)
            }
            Compiled::Sub(a, b) => {
                finite(a.eval(at)?.operand()?.checked_sub(b.eval(at)?.operand()?)?)
            }
            Compiled::Mul(a, b) => {
                finite(a.eval(at)?.operand()?.checked_mul(b.eval(at)?.operand()?)?)
            }
            Compiled::Quot(a, b) => {
                let u = a.eval(at)?.operand()?;
                let v = b.eval(at)?.operand()?;
                match u.checked_div(v) {
                    Some(q) => finite(q?),
                    None if u.is_zero() => Ok(ExtCoeff::Indeterminate),
                    None => Ok(ExtCoeff::Infinite(u)),
                }
            }
            Compiled::Compl(a) => finite(Rational::ONE.checked_sub(a.eval(at)?.operand()?)?),
        }
    }
}

/// Value of `e` at a 0/1 vertex. A quotient with zero denominator yields
/// `0/0` or `k/0`; using such a value as an operand is an error.
pub fn eval_at(e: &Expr, vertex: &Vertex) -> Result<ExtCoeff> {
    Compiled::new(e, &vertex.symbols)?.eval(vertex.point)
}

/// Constituent normal form: one coefficient per constituent, indexed by mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    symbols: SymbolList,
    coeffs: Vec<ExtCoeff>,
}

/// Below this many symbols expansion is not worth distributing.
const PARALLEL_MIN_SYMBOLS: usize = 10;

/// Develops `e` over `symbols` (which must cover its free symbols).
pub fn expand(e: &Expr, symbols: &SymbolList) -> Result<LinearForm> {
    let exec = if symbols.len() >= PARALLEL_MIN_SYMBOLS {
        Execution::default()
    } else {
        Execution::Sequential
    };
    expand_with(e, symbols, exec)
}

pub fn expand_with(e: &Expr, symbols: &SymbolList, exec: Execution) -> Result<LinearForm> {
    symbols.check_limit()?;
    let program = Compiled::new(e, symbols)?;
    let coeffs = exec.try_map_range(constituent::count(symbols.len()), |i| {
        let c = Constituent::from_mask(i as u32);
        program.eval(c).map_err(|err| err.at(|| c.render(symbols)))
    })?;
    Ok(LinearForm {
        symbols: symbols.clone(),
        coeffs,
    })
}

impl LinearForm {
    /// Builds a form from coefficients in mask order.
    pub fn from_coefficients(symbols: SymbolList, coeffs: Vec<ExtCoeff>) -> Result<Self> {
        symbols.check_limit()?;
        assert_eq!(
            coeffs.len(),
            constituent::count(symbols.len()),
            "need one coefficient per constituent"
        );
        Ok(LinearForm { symbols, coeffs })
    }

    pub fn constant(symbols: &SymbolList, value: Rational) -> Result<Self> {
        symbols.check_limit()?;
        Ok(LinearForm {
            symbols: symbols.clone(),
            coeffs: vec![ExtCoeff::Finite(value); constituent::count(symbols.len())],
        })
    }

    pub fn zero(symbols: &SymbolList) -> Result<Self> {
        Self::constant(symbols, Rational::ZERO)
    }

    pub fn symbols(&self) -> &SymbolList {
        &self.symbols
    }

    pub fn coeff(&self, c: Constituent) -> ExtCoeff {
        self.coeffs[c.index()]
    }

    pub fn coefficients(&self) -> &[ExtCoeff] {
        &self.coeffs
    }

    /// `(constituent, coefficient)` pairs in mask order.
    pub fn iter(&self) -> impl Iterator<Item = (Constituent, ExtCoeff)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Constituent::from_mask(i as u32), *c))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ExtCoeff::ZERO)
    }

    /// True iff every coefficient is 0 or 1, i.e. the form denotes a class.
    pub fn is_interpretable(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_class_valued())
    }

    /// Constituents with the given coefficient, in mask order.
    pub fn constituents_with(&self, value: ExtCoeff) -> Vec<Constituent> {
        self.iter()
            .filter(|(_, c)| *c == value)
            .map(|(k, _)| k)
            .collect()
    }

    fn zip_finite(
        &self,
        other: &LinearForm,
        op: impl Fn(Rational, Rational) -> Result<Rational>,
    ) -> Result<LinearForm> {
        if self.symbols != other.symbols {
            return Err(Error::SymbolListMismatch {
                left: self.symbols.to_string(),
                right: other.symbols.to_string(),
            });
        }
        let coeffs = self
            .iter()
            .zip(other.coeffs.iter())
            .map(|((k, a), b)| {
                let r = match (a, b) {
                    (ExtCoeff::Finite(a), ExtCoeff::Finite(b)) => op(a, *b),
                    _ => Err(Error::nesting()),
                };
                r.map(ExtCoeff::Finite)
                    .map_err(|e| e.at(|| k.render(&self.symbols)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearForm {
            symbols: self.symbols.clone(),
            coeffs,
        })
    }

    pub fn add(&self, other: &LinearForm) -> Result<LinearForm> {
        self.zip_finite(other, Rational::checked_add)
    }

    pub fn sub(&self, other: &LinearForm) -> Result<LinearForm> {
        self.zip_finite(other, Rational::checked_sub)
    }

    /// Constituents are orthogonal idempotents, so products are taken
    /// coefficientwise.
    pub fn mul(&self, other: &LinearForm) -> Result<LinearForm> {
        self.zip_finite(other, Rational::checked_mul)
    }

    /// A sum of `coefficient * constituent` terms, skipping zero
    /// coefficients, in display order. Only defined for finite forms.
    pub fn to_expr(&self) -> Result<Expr> {
        let mut out: Option<Expr> = None;
        for c in constituent::display_order(self.symbols.len()) {
            let value = self
                .coeff(c)
                .operand()
                .map_err(|e| e.at(|| c.render(&self.symbols)))?;
            if value.is_zero() {
                continue;
            }
            let magnitude = value.abs()?;
            let product = c.to_expr(&self.symbols);
            let term = if magnitude.is_one() {
                product
            } else {
                let k = if magnitude.is_integer() {
                    Expr::Const(magnitude)
                } else {
                    Expr::int(magnitude.numer()).quot(Expr::int(magnitude.denom()))
                };
                c.factors(&self.symbols).fold(k, |acc, f| acc * f)
            };
            out = Some(match (out, value.is_negative()) {
                (None, false) => term,
                (None, true) => -term,
                (Some(acc), false) => acc + term,
                (Some(acc), true) => acc - term,
            });
        }
        Ok(out.unwrap_or_else(Expr::zero))
    }
}

pub fn lf_add(a: &LinearForm, b: &LinearForm) -> Result<LinearForm> {
    a.add(b)
}

pub fn lf_sub(a: &LinearForm, b: &LinearForm) -> Result<LinearForm> {
    a.sub(b)
}

pub fn lf_mul(a: &LinearForm, b: &LinearForm) -> Result<LinearForm> {
    a.mul(b)
}

pub fn is_interpretable(f: &LinearForm) -> bool {
    f.is_interpretable()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::symbols;

    fn q(n: i64) -> ExtCoeff {
        ExtCoeff::Finite(Rational::integer(n))
    }

    fn x() -> Expr {
        Expr::sym("x")
    }

    fn y() -> Expr {
        Expr::sym("y")
    }

    #[test]
    fn eval_examples() {
        let v = Vertex::from_pairs(&[("x", true)]).unwrap();
        assert_eq!(eval_at(&(x() * x()), &v).unwrap(), q(1));
        assert_eq!(eval_at(&(Expr::one() - x()), &v).unwrap(), q(0));
        let v = Vertex::from_pairs(&[("x", false), ("y", false)]).unwrap();
        assert_eq!(eval_at(&(y() / x()), &v).unwrap(), ExtCoeff::Indeterminate);
        let v = Vertex::from_pairs(&[("x", false), ("y", true)]).unwrap();
        assert_eq!(
            eval_at(&(y() / x()), &v).unwrap(),
            ExtCoeff::Infinite(Rational::ONE)
        );
    }

    #[test]
    fn extended_values_do_not_nest() {
        let v = Vertex::from_pairs(&[("x", false), ("y", false)]).unwrap();
        let e = (y() / x()) + Expr::one();
        assert_eq!(eval_at(&e, &v), Err(Error::nesting()));
        let e = Expr::one() / (y() / x());
        assert_eq!(eval_at(&e, &v), Err(Error::nesting()));
    }

    #[test]
    fn unbound_symbol() {
        let v = Vertex::from_pairs(&[("x", true)]).unwrap();
        assert_eq!(eval_at(&y(), &v), Err(Error::UnboundSymbol("y".into())));
    }

    #[test]
    fn overflow_names_constituent() {
        let xs = symbols(&["x"]).unwrap();
        let big = Expr::int(i64::MAX);
        let err = expand(&(big * x() * Expr::int(2)), &xs).unwrap_err();
        assert_eq!(
            err,
            Error::Overflow {
                constituent: Some("x".into())
            }
        );
    }

    #[test]
    fn expand_examples() {
        let xs = symbols(&["x"]).unwrap();
        let f = expand(&(x() + (Expr::one() - x())), &xs).unwrap();
        assert_eq!(f, LinearForm::constant(&xs, Rational::ONE).unwrap());

        let xy = symbols(&["x", "y"]).unwrap();
        let f = expand(&(x() + y()), &xy).unwrap();
        assert_eq!(f.coefficients(), &[q(0), q(1), q(1), q(2)]);

        let f = expand(&(y() / x()), &xy).unwrap();
        assert_eq!(
            f.coefficients(),
            &[
                ExtCoeff::Indeterminate,
                q(0),
                ExtCoeff::Infinite(Rational::ONE),
                q(1)
            ]
        );
    }

    #[test]
    fn expansion_over_no_symbols() {
        let f = expand(&(Expr::int(3) - Expr::int(3)), &SymbolList::default()).unwrap();
        assert_eq!(f.coefficients(), &[q(0)]);
        assert_eq!(f.to_expr().unwrap(), Expr::zero());
    }

    #[test]
    fn interpretability() {
        let xy = symbols(&["x", "y"]).unwrap();
        assert!(!expand(&(x() + y()), &xy).unwrap().is_interpretable());
        assert!(expand(&(x() + y() - x() * y()), &xy)
            .unwrap()
            .is_interpretable());
        assert!(expand(&Expr::one(), &xy).unwrap().is_interpretable());
    }

    #[test]
    fn form_arithmetic() {
        let xyz = symbols(&["x", "y", "z"]).unwrap();
        let z = Expr::sym("z");
        let fx = expand(&x(), &xyz).unwrap();
        assert_eq!(lf_mul(&fx, &fx).unwrap(), fx);
        assert_eq!(lf_add(&fx, &LinearForm::zero(&xyz).unwrap()).unwrap(), fx);
        let lhs = expand(&(x() * (y() + z.clone())), &xyz).unwrap();
        let one = LinearForm::constant(&xyz, Rational::ONE).unwrap();
        let rhs = lf_add(
            &expand(&(x() * y()), &xyz).unwrap(),
            &expand(&(x() * z), &xyz).unwrap(),
        )
        .unwrap();
        assert_eq!(lf_mul(&lhs, &one).unwrap(), rhs);
    }

    #[test]
    fn form_arithmetic_errors() {
        let xs = symbols(&["x"]).unwrap();
        let xy = symbols(&["x", "y"]).unwrap();
        let a = expand(&x(), &xs).unwrap();
        let b = expand(&x(), &xy).unwrap();
        assert!(matches!(a.add(&b), Err(Error::SymbolListMismatch { .. })));
        let q = expand(&(y() / x()), &xy).unwrap();
        assert!(matches!(
            q.mul(&b),
            Err(Error::UninterpretableNesting {
                constituent: Some(_)
            })
        ));
    }

    #[test]
    fn to_expr_round_trips_through_expand() {
        let xy = symbols(&["x", "y"]).unwrap();
        let e = Expr::int(2) * x() - y() + (x() * y()) / Expr::int(3);
        let f = expand(&e, &xy).unwrap();
        assert_eq!(expand(&f.to_expr().unwrap(), &xy).unwrap(), f);
    }

    #[test]
    fn sequential_and_parallel_expansion_agree() {
        let names: Vec<String> = (0..12).map(|i| format!("s{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let syms = symbols(&refs).unwrap();
        let e = refs
            .iter()
            .map(|n| Expr::sym(n))
            .reduce(|a, b| a + b * Expr::int(2))
            .unwrap();
        assert_eq!(
            expand_with(&e, &syms, Execution::Sequential).unwrap(),
            expand_with(&e, &syms, Execution::Parallel).unwrap()
        );
    }
}
