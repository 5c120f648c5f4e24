//! Rendering in the surface syntax accepted by [`crate::parser`].
//!
//! `format_expr` inserts only the parentheses the grammar needs, so
//! `parse_expression(&format_expr(e)) == e` for trees whose constants are
//! integers (the only constants the parser can produce).

use crate::constituent;
use crate::expr::Expr;
use crate::form::{ExtCoeff, LinearForm};
use crate::rational::Rational;

const ADDITIVE: u8 = 1;
const PRODUCT: u8 = 2;
const POSTFIX: u8 = 3;
const ATOM: u8 = 4;

pub fn format_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, ADDITIVE);
    out
}

/// `Sub(0, t)` is printed as `-t` unless `t` is a bare literal, which the
/// parser would fold into a negative constant.
fn is_negation(e: &Expr) -> Option<&Expr> {
    match e {
        Expr::Sub(a, b) if **a == Expr::zero() && !is_literal(b) => Some(b),
        _ => None,
    }
}

fn is_literal(e: &Expr) -> bool {
    matches!(e, Expr::Const(r) if r.is_integer() && !r.is_negative())
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => ADDITIVE,
        Expr::Mul(..) | Expr::Quot(..) => PRODUCT,
        Expr::Compl(_) => POSTFIX,
        Expr::Const(_) | Expr::Sym(_) => ATOM,
    }
}

fn write_expr(out: &mut String, e: &Expr, min: u8) {
    if precedence(e) < min {
        out.push('(');
        write_expr(out, e, ADDITIVE);
        out.push(')');
        return;
    }
    if let Some(t) = is_negation(e) {
        out.push('-');
        write_expr(out, t, PRODUCT);
        return;
    }
    match e {
        Expr::Const(r) => write_rational(out, *r),
        Expr::Sym(s) => out.push_str(s.name()),
        Expr::Add(a, b) => binary(out, a, " + ", b, ADDITIVE),
        Expr::Sub(a, b) => binary(out, a, " - ", b, ADDITIVE),
        Expr::Mul(a, b) => binary(out, a, "*", b, PRODUCT),
        Expr::Quot(a, b) => binary(out, a, "/", b, PRODUCT),
        Expr::Compl(a) => {
            write_expr(out, a, POSTFIX);
            out.push('\'');
        }
    }
}

fn binary(out: &mut String, a: &Expr, op: &str, b: &Expr, level: u8) {
    write_expr(out, a, level);
    out.push_str(op);
    write_expr(out, b, level + 1);
}

fn write_rational(out: &mut String, r: Rational) {
    if r.is_integer() && !r.is_negative() {
        out.push_str(&r.to_string());
    } else {
        out.push('(');
        out.push_str(&r.to_string());
        out.push(')');
    }
}

/// A coefficient as it appears in front of a constituent: bare when it is
/// a non-negative integer, parenthesised otherwise.
pub fn format_coefficient(c: ExtCoeff) -> String {
    match c {
        ExtCoeff::Finite(r) => {
            let mut s = String::new();
            write_rational(&mut s, r);
            s
        }
        other => format!("({other})"),
    }
}

/// Every constituent with its coefficient, zeros included, e.g.
/// `1*x*y + 0*x*y' + (1/0)*x'*y + (0/0)*x'*y'`.
pub fn format_form(f: &LinearForm) -> String {
    let symbols = f.symbols();
    constituent::display_order(symbols.len())
        .map(|c| {
            let coeff = format_coefficient(f.coeff(c));
            if symbols.is_empty() {
                coeff
            } else {
                format!("{coeff}*{}", c.render(symbols))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Nonzero terms only, unit coefficients omitted (`x'*y`, `2*x*y`, `0`).
/// Falls back to [`format_form`] when a coefficient is `0/0` or `k/0`.
pub fn format_form_compact(f: &LinearForm) -> String {
    match f.to_expr() {
        Ok(e) => format_expr(&e),
        Err(_) => format_form(f),
    }
}
