use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest number of symbols a constituent expansion may range over.
pub const MAX_SYMBOLS: usize = 20;

/// An elective symbol: lowercase letter followed by lowercase letters,
/// digits or underscores.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(Symbol(Arc::from(name)))
        } else {
            Err(Error::InvalidSymbol(name.to_string()))
        }
    }

    pub(crate) fn new_unchecked(name: &str) -> Self {
        debug_assert!(is_valid_name(name));
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// `v` followed by one or more digits; these names are handed out to
    /// indeterminate classes by the solver.
    pub fn is_reserved(&self) -> bool {
        let rest = match self.0.strip_prefix('v') {
            Some(rest) => rest,
            None => return false,
        };
        !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut bytes = name.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_lowercase() => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered list of distinct symbols. Position `i` is bit `i` of every
/// constituent mask built over the list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SymbolList(Vec<Symbol>);

impl SymbolList {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.to_string()));
            }
        }
        Ok(SymbolList(symbols))
    }

    /// Parses a comma-separated list such as `"x,y,z"`.
    pub fn parse(text: &str) -> Result<Self> {
        let symbols = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(symbols)
    }

    pub(crate) fn from_distinct(symbols: Vec<Symbol>) -> Self {
        SymbolList(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn index_of(&self, symbol: &Symbol) -> Option<usize> {
        self.0.iter().position(|s| s == symbol)
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index_of(symbol).is_some()
    }

    /// The list without `symbol`, order otherwise unchanged.
    pub fn without(&self, symbol: &Symbol) -> SymbolList {
        SymbolList(self.0.iter().filter(|s| *s != symbol).cloned().collect())
    }

    /// Appends the symbols of `other` that are not already present.
    pub fn union(&self, other: &SymbolList) -> SymbolList {
        let mut out = self.0.clone();
        for s in other.iter() {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        SymbolList(out)
    }

    pub(crate) fn check_limit(&self) -> Result<()> {
        if self.len() > MAX_SYMBOLS {
            Err(Error::SymbolLimitExceeded {
                count: self.len(),
                max: MAX_SYMBOLS,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for SymbolList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a SymbolList {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
