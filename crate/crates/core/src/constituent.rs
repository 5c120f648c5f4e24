use std::fmt;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::rational::Rational;
use crate::symbol::SymbolList;

/// One of the `2^n` products formed by taking, for each symbol, either the
/// symbol or its complement. Bit `i` set selects symbol `i` itself.
///
/// A constituent is also a 0/1 vertex: the point where it evaluates to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constituent {
    mask: u32,
}

impl Constituent {
    pub const fn from_mask(mask: u32) -> Self {
        Constituent { mask }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn index(self) -> usize {
        self.mask as usize
    }

    /// Whether symbol `i` appears positively.
    pub fn is_positive(self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    /// Value of symbol `i` at this vertex.
    pub fn value(self, i: usize) -> Rational {
        if self.is_positive(i) {
            Rational::ONE
        } else {
            Rational::ZERO
        }
    }

    pub fn render(self, symbols: &SymbolList) -> String {
        if symbols.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, s) in symbols.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(s.name());
            if !self.is_positive(i) {
                out.push('\'');
            }
        }
        out
    }

    /// The product of factors `x` / `x'` as an expression tree.
    pub fn to_expr(self, symbols: &SymbolList) -> Expr {
        self.factors(symbols)
            .reduce(|acc, f| acc * f)
            .unwrap_or_else(Expr::one)
    }

    /// `x` or `x'` for each symbol, in list order.
    pub fn factors(self, symbols: &SymbolList) -> impl Iterator<Item = Expr> + '_ {
        symbols.iter().enumerate().map(move |(i, s)| {
            let factor = Expr::Sym(s.clone());
            if self.is_positive(i) {
                factor
            } else {
                factor.compl()
            }
        })
    }
}

/// Displays the raw mask; use [`Constituent::render`] for the factor form.
impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.mask)
    }
}

pub(crate) fn count(n: usize) -> usize {
    1usize << n
}

/// All `2^n` constituents over `symbols`, in ascending mask order.
pub fn constituents(symbols: &SymbolList) -> Result<Vec<Constituent>> {
    if symbols.is_empty() {
        return Err(Error::EmptySymbolList);
    }
    symbols.check_limit()?;
    Ok(all(symbols.len()))
}

pub(crate) fn all(n: usize) -> Vec<Constituent> {
    (0..count(n) as u32).map(Constituent::from_mask).collect()
}

/// Constituents in the order the developed form is conventionally written:
/// vertices descending, with the first symbol most significant
/// (`xy, xy', x'y, x'y'` for two symbols).
pub fn display_order(n: usize) -> impl Iterator<Item = Constituent> {
    let total = count(n) as u32;
    (0..total).map(move |p| {
        let v = total - 1 - p;
        // v has the first symbol in its top bit; flip so it lands on bit 0.
        let mut mask = 0u32;
        for i in 0..n {
            if v >> (n - 1 - i) & 1 == 1 {
                mask |= 1 << i;
            }
        }
        Constituent::from_mask(mask)
    })
}
