//! Modern Boolean operations on constituent forms, and a report of where
//! Boole's `+` and `-` stop denoting classes.
//!
//! On interpretable forms union, intersection and complement are the
//! coefficientwise max, min and `1 - c`. Boole's sum agrees with union
//! only when the summands are disjoint, and his difference agrees with set
//! difference only when the subtrahend is contained in the minuend.

use crate::constituent::Constituent;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::form::{expand, ExtCoeff, LinearForm};
use crate::format::format_coefficient;
use crate::rational::Rational;
use crate::symbol::SymbolList;

fn class_bits(f: &LinearForm) -> Result<Vec<bool>> {
    f.iter()
        .map(|(c, k)| match k {
            ExtCoeff::Finite(r) if r.is_one() => Ok(true),
            ExtCoeff::Finite(r) if r.is_zero() => Ok(false),
            other => Err(Error::NotInterpretable {
                constituent: c.render(f.symbols()),
                coefficient: format_coefficient(other),
            }),
        })
        .collect()
}

fn from_bits(symbols: &SymbolList, bits: impl Iterator<Item = bool>) -> Result<LinearForm> {
    let coeffs = bits
        .map(|b| if b { ExtCoeff::ONE } else { ExtCoeff::ZERO })
        .collect();
    LinearForm::from_coefficients(symbols.clone(), coeffs)
}

fn binary(f: &LinearForm, g: &LinearForm, op: impl Fn(bool, bool) -> bool) -> Result<LinearForm> {
    if f.symbols() != g.symbols() {
        return Err(Error::SymbolListMismatch {
            left: f.symbols().to_string(),
            right: g.symbols().to_string(),
        });
    }
    let a = class_bits(f)?;
    let b = class_bits(g)?;
    from_bits(f.symbols(), a.into_iter().zip(b).map(|(a, b)| op(a, b)))
}

/// Union.
pub fn b_or(f: &LinearForm, g: &LinearForm) -> Result<LinearForm> {
    binary(f, g, |a, b| a || b)
}

/// Intersection.
pub fn b_and(f: &LinearForm, g: &LinearForm) -> Result<LinearForm> {
    binary(f, g, |a, b| a && b)
}

/// Complement.
pub fn b_not(f: &LinearForm) -> Result<LinearForm> {
    let bits = class_bits(f)?;
    from_bits(f.symbols(), bits.into_iter().map(|b| !b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceReport {
    pub expression: Expr,
    pub symbols: SymbolList,
    /// Constituents whose coefficient is neither 0 nor 1.
    pub offending: Vec<(Constituent, ExtCoeff)>,
    /// Constituents that must be empty for the expression to denote a class.
    pub interpretability_conditions: Vec<Constituent>,
}

impl DivergenceReport {
    pub fn is_interpretable(&self) -> bool {
        self.offending.is_empty()
    }

    /// A reading of the condition `c = 0` in words, for one or two symbols.
    pub fn gloss(&self, c: Constituent) -> Option<String> {
        let names: Vec<&str> = self.symbols.iter().map(|s| s.name()).collect();
        match (names.as_slice(), c.mask()) {
            ([x], 1) => Some(format!("{x} is empty")),
            ([x], 0) => Some(format!("{x} is the whole universe")),
            ([x, y], 3) => Some(format!("{x} and {y} are mutually exclusive")),
            ([x, y], 2) => Some(format!("{y} is a subset of {x}")),
            ([x, y], 1) => Some(format!("{x} is a subset of {y}")),
            ([x, y], 0) => Some(format!("{x} and {y} together exhaust the universe")),
            _ => None,
        }
    }
}

/// Develops `e` and lists every constituent that keeps it from denoting a
/// class. Symbols default to the free symbols of `e`.
pub fn analyze(e: &Expr, symbols: Option<&SymbolList>) -> Result<DivergenceReport> {
    if !e.is_division_free() {
        return Err(Error::UninterpretableNesting { constituent: None });
    }
    let symbols = symbols.cloned().unwrap_or_else(|| e.free_symbols());
    let f = expand(e, &symbols)?;
    let offending: Vec<_> = f.iter().filter(|(_, k)| !k.is_class_valued()).collect();
    let interpretability_conditions = offending.iter().map(|(c, _)| *c).collect();
    Ok(DivergenceReport {
        expression: e.clone(),
        symbols,
        offending,
        interpretability_conditions,
    })
}

/// The constant form 1 over `symbols`.
pub fn universe(symbols: &SymbolList) -> Result<LinearForm> {
    LinearForm::constant(symbols, Rational::ONE)
}
