#![allow(dead_code)]

use boole_core::{Expr, Rational, Symbol};
use proptest::prelude::*;

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn leaf() -> impl Strategy<Value = Expr> {
    leaf_over(&NAMES)
}

pub fn leaf_over(names: &'static [&'static str]) -> impl Strategy<Value = Expr> {
    prop_oneof![
        (-3i64..=3).prop_map(|k| Expr::Const(Rational::integer(k))),
        prop::sample::select(names).prop_map(|n| Expr::Sym(Symbol::new(n).unwrap())),
    ]
}

/// Division-free expressions over `names`, depth at most `depth`.
pub fn division_free_over(
    names: &'static [&'static str],
    depth: u32,
) -> impl Strategy<Value = Expr> {
    leaf_over(names).prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            inner.prop_map(Expr::compl),
        ]
    })
}

/// Division-free expressions over at most four symbols, depth at most 6.
pub fn division_free() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            inner.prop_map(Expr::compl),
        ]
    })
}

/// Any expression the grammar can express, quotients included.
pub fn any_expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            inner.prop_map(Expr::compl),
        ]
    })
}

pub fn all_symbols() -> boole_core::SymbolList {
    boole_core::expr::symbols(&NAMES).unwrap()
}
