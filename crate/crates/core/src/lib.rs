//! Boole's algebra of elective symbols.
//!
//! Expressions over idempotent symbols are developed into constituent
//! normal form, symbols are eliminated, and equations are solved for an
//! unknown by formal division, with `0/0` read as an indeterminate class and
//! `k/0` as a condition that a constituent be empty. Every result can be
//! checked against [`oracle`], which interprets expressions over explicit
//! finite universes without going through the algebra.
//!
//! ```
//! use boole_core::{parse_equation, solve_for, verify_solved, Symbol};
//!
//! let eq = parse_equation("x*w = y").unwrap();
//! let sol = solve_for(&eq, &Symbol::new("w").unwrap()).unwrap();
//! assert_eq!(sol.render(), "w = x*y + v1*x'*y'  where x'*y = 0");
//! assert!(verify_solved(&sol, &eq, 3).unwrap().passed());
//! ```

pub mod constituent;
pub mod error;
pub mod exec;
pub mod expr;
pub mod form;
pub mod format;
pub mod inference;
pub mod modern;
pub mod nyaya;
pub mod oracle;
pub mod parser;
pub mod rational;
pub mod symbol;

pub use constituent::{constituents, Constituent};
pub use error::{Error, Result};
pub use exec::Execution;
pub use expr::{Equation, Expr};
pub use form::{
    eval_at, expand, is_interpretable, lf_add, lf_mul, lf_sub, ExtCoeff, LinearForm, Vertex,
};
pub use format::{format_expr, format_form, format_form_compact};
pub use inference::{
    combine_premises, eliminate, eliminate_over, solve_for, solve_for_over, syllogism,
    EliminationResult, SolvedClass, SyllogismOutcome,
};
pub use modern::{analyze, b_and, b_not, b_or, DivergenceReport};
pub use oracle::{verify_elimination, verify_solved, SetAssignment, Universe, VerificationReport};
pub use parser::{parse_equation, parse_expression, ParseError};
pub use rational::Rational;
pub use symbol::{Symbol, SymbolList, MAX_SYMBOLS};
