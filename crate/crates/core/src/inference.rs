//! Elimination of symbols and solution of equations by formal division.
//!
//! Writing `f = lhs - rhs` as `a*w + b*(1 - w)` with `a = f(w = 1)` and
//! `b = f(w = 0)`:
//!
//! * eliminating `w` leaves `a*b = 0`;
//! * solving `f = 0` for `w` gives the formal quotient `w = -b / (a - b)`,
//!   which is developed over the remaining symbols and read off
//!   coefficient by coefficient: 1 includes the constituent, 0 excludes it,
//!   `0/0` attaches an arbitrary sub-class `v1, v2, ...`, and anything else
//!   (`k/0` or a number outside {0, 1}) forces the constituent to be empty.

use crate::constituent::Constituent;
use crate::error::{Error, Result};
use crate::expr::{Equation, Expr};
use crate::form::{expand, ExtCoeff, LinearForm};
use crate::format::format_expr;
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolList};

/// An equation solved for one unknown. The four constituent sets partition
/// the constituents over `free_symbols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedClass {
    pub unknown: Symbol,
    pub free_symbols: SymbolList,
    /// Coefficient 1.
    pub included: Vec<Constituent>,
    /// Coefficient `0/0`: an arbitrary subset of the constituent, named `vk`.
    pub indeterminate: Vec<(Symbol, Constituent)>,
    /// Constituents that must denote the empty class.
    pub side_conditions: Vec<Constituent>,
    /// Coefficient 0.
    pub excluded: Vec<Constituent>,
    /// The developed quotient the classification was read from.
    pub development: LinearForm,
}

impl SolvedClass {
    /// `x*y + v1*x'*y'`, or `0` when nothing is included.
    pub fn render_value(&self) -> String {
        let mut terms: Vec<String> = self
            .included
            .iter()
            .map(|c| c.render(&self.free_symbols))
            .collect();
        for (v, c) in &self.indeterminate {
            if self.free_symbols.is_empty() {
                terms.push(v.to_string());
            } else {
                terms.push(format!("{v}*{}", c.render(&self.free_symbols)));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// `w = x*y + v1*x'*y'  where x'*y = 0`.
    pub fn render(&self) -> String {
        let mut out = format!("{} = {}", self.unknown, self.render_value());
        if !self.side_conditions.is_empty() {
            let conds: Vec<String> = self
                .side_conditions
                .iter()
                .map(|c| format!("{} = 0", c.render(&self.free_symbols)))
                .collect();
            out.push_str("  where ");
            out.push_str(&conds.join(", "));
        }
        out
    }
}

/// The residual `g = 0` left after eliminating a symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    pub residual: Equation,
    /// `g` in constituent normal form over the remaining symbols.
    pub form: LinearForm,
}

impl EliminationResult {
    fn from_form(form: LinearForm) -> Result<Self> {
        Ok(EliminationResult {
            residual: Equation::new(form.to_expr()?, Expr::zero()),
            form,
        })
    }

    /// True when the residual carries no information (`0 = 0`).
    pub fn is_trivial(&self) -> bool {
        self.form.is_zero()
    }

    /// True when the residual can never hold: no coefficient is zero, so no
    /// constituent may be inhabited, yet the constituents exhaust the universe.
    pub fn is_contradictory(&self) -> bool {
        self.form
            .coefficients()
            .iter()
            .all(|c| *c != ExtCoeff::ZERO)
    }
}

fn require_division_free(eq: &Equation) -> Result<()> {
    if eq.is_division_free() {
        Ok(())
    } else {
        Err(Error::UninterpretableNesting { constituent: None })
    }
}

/// `f(drop = 1) * f(drop = 0) = 0`, normalised over the other free symbols
/// of `eq` in first-occurrence order.
pub fn eliminate(eq: &Equation, drop: &Symbol) -> Result<EliminationResult> {
    if !eq.mentions(drop) {
        return Err(Error::SymbolNotPresent(drop.to_string()));
    }
    let remaining = eq.free_symbols().without(drop);
    eliminate_over(eq, drop, &remaining)
}

/// As [`eliminate`], normalising over an explicit list of remaining
/// symbols, which must cover the free symbols of `eq` other than `drop`.
pub fn eliminate_over(
    eq: &Equation,
    drop: &Symbol,
    remaining: &SymbolList,
) -> Result<EliminationResult> {
    if remaining.contains(drop) {
        return Err(Error::DuplicateSymbol(drop.to_string()));
    }
    require_division_free(eq)?;
    let f = eq.homogeneous_form();
    let product = f.substitute(drop, Rational::ONE) * f.substitute(drop, Rational::ZERO);
    EliminationResult::from_form(expand(&product, remaining)?)
}

/// `sum of (lhs_i - rhs_i)^2 = 0`. At each vertex a sum of squares vanishes
/// only when every term does, so no premise can cancel another.
pub fn combine_premises(premises: &[Equation]) -> Result<Equation> {
    let mut sum: Option<Expr> = None;
    for p in premises {
        require_division_free(p)?;
        let f = p.homogeneous_form();
        let square = f.clone() * f;
        sum = Some(match sum {
            None => square,
            Some(acc) => acc + square,
        });
    }
    let sum = sum.ok_or(Error::EmptyPremises)?;
    Ok(Equation::new(sum, Expr::zero()))
}

/// Solves `eq` for `unknown`, developing over the other free symbols in
/// first-occurrence order.
pub fn solve_for(eq: &Equation, unknown: &Symbol) -> Result<SolvedClass> {
    let free = eq.free_symbols().without(unknown);
    solve_for_over(eq, unknown, &free)
}

/// As [`solve_for`], developing over an explicit list of symbols, which
/// must cover the free symbols of `eq` other than `unknown`.
pub fn solve_for_over(eq: &Equation, unknown: &Symbol, over: &SymbolList) -> Result<SolvedClass> {
    if !eq.mentions(unknown) {
        return Err(Error::SymbolNotPresent(unknown.to_string()));
    }
    if let Some(s) = eq
        .free_symbols()
        .iter()
        .chain(over.iter())
        .find(|s| s.is_reserved())
    {
        return Err(Error::NameCollision(s.to_string()));
    }
    if over.contains(unknown) {
        return Err(Error::DuplicateSymbol(unknown.to_string()));
    }
    require_division_free(eq)?;

    let f = eq.homogeneous_form();
    let a = f.substitute(unknown, Rational::ONE);
    let b = f.substitute(unknown, Rational::ZERO);
    let quotient = (-b.clone()).quot(a - b);
    let development = expand(&quotient, over)?;

    let mut solved = SolvedClass {
        unknown: unknown.clone(),
        free_symbols: over.clone(),
        included: Vec::new(),
        indeterminate: Vec::new(),
        side_conditions: Vec::new(),
        excluded: Vec::new(),
        development: development.clone(),
    };
    for (c, coeff) in development.iter() {
        match coeff {
            ExtCoeff::Finite(r) if r.is_one() => solved.included.push(c),
            ExtCoeff::Finite(r) if r.is_zero() => solved.excluded.push(c),
            ExtCoeff::Indeterminate => {
                let name = format!("v{}", solved.indeterminate.len() + 1);
                solved.indeterminate.push((Symbol::new_unchecked(&name), c));
            }
            _ => solved.side_conditions.push(c),
        }
    }
    Ok(solved)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyllogismOutcome {
    Residual(EliminationResult),
    Solved(SolvedClass),
}

/// Combines the premises, eliminates each symbol of `drop` left to right,
/// then optionally solves the residual for `conclude_for`.
pub fn syllogism(
    premises: &[Equation],
    drop: &[Symbol],
    conclude_for: Option<&Symbol>,
) -> Result<SyllogismOutcome> {
    let combined = combine_premises(premises)?;
    let mut symbols = combined.free_symbols();
    for d in drop {
        if !symbols.contains(d) {
            return Err(Error::SymbolNotPresent(d.to_string()));
        }
    }
    let mut current = EliminationResult::from_form(expand(&combined.lhs, &symbols)?)?;
    for d in drop {
        let remaining = symbols.without(d);
        current = eliminate_over(&current.residual, d, &remaining)?;
        symbols = remaining;
    }
    match conclude_for {
        None => Ok(SyllogismOutcome::Residual(current)),
        Some(unknown) => {
            if !symbols.contains(unknown) {
                return Err(Error::SymbolNotPresent(unknown.to_string()));
            }
            let over = symbols.without(unknown);
            solve_for_over(&current.residual, unknown, &over).map(SyllogismOutcome::Solved)
        }
    }
}

impl std::fmt::Display for EliminationResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} = {}",
            format_expr(&self.residual.lhs),
            format_expr(&self.residual.rhs)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_equation;

    fn eq(text: &str) -> Equation {
        parse_equation(text).unwrap()
    }

    fn sym(name: &str) -> Symbol {
        Symbol::new(name).unwrap()
    }

    fn rendered(sol: &SolvedClass, cs: &[Constituent]) -> Vec<String> {
        cs.iter().map(|c| c.render(&sol.free_symbols)).collect()
    }

    #[test]
    fn eliminate_unknown_class() {
        let r = eliminate(&eq("x*w - y = 0"), &sym("w")).unwrap();
        assert_eq!(r.to_string(), "x'*y = 0");
        assert_eq!(r.form.symbols().to_string(), "x,y");
    }

    #[test]
    fn eliminate_vacuous() {
        let r = eliminate(&eq("x - x = 0"), &sym("x")).unwrap();
        assert_eq!(r.to_string(), "0 = 0");
        assert!(r.is_trivial());
    }

    #[test]
    fn eliminate_middle_term() {
        let r = eliminate(&eq("x*(1 - y) + y*(1 - z) = 0"), &sym("y")).unwrap();
        assert_eq!(r.to_string(), "x*z' = 0");
    }

    #[test]
    fn eliminate_errors() {
        assert_eq!(
            eliminate(&eq("x = y"), &sym("q")),
            Err(Error::SymbolNotPresent("q".into()))
        );
        assert!(matches!(
            eliminate(&eq("y/x = w"), &sym("w")),
            Err(Error::UninterpretableNesting { .. })
        ));
    }

    #[test]
    fn combine() {
        let c = combine_premises(&[eq("x*y' = 0"), eq("y*z' = 0")]).unwrap();
        let syms = c.free_symbols();
        let plain = expand(
            &crate::parser::parse_expression("x*y' + y*z'").unwrap(),
            &syms,
        )
        .unwrap();
        assert_eq!(expand(&c.lhs, &syms).unwrap(), plain);

        let c = combine_premises(&[eq("0 = 0")]).unwrap();
        assert!(expand(&c.lhs, &SymbolList::default()).unwrap().is_zero());

        let c = combine_premises(&[eq("x = 1"), eq("x = 0")]).unwrap();
        let f = expand(&c.lhs, &c.free_symbols()).unwrap();
        assert!(f.coefficients().iter().all(|k| *k == ExtCoeff::ONE));

        assert_eq!(combine_premises(&[]), Err(Error::EmptyPremises));
    }

    #[test]
    fn solve_the_quotient_example() {
        let sol = solve_for(&eq("x*w = y"), &sym("w")).unwrap();
        assert_eq!(rendered(&sol, &sol.included), ["x*y"]);
        assert_eq!(rendered(&sol, &sol.excluded), ["x*y'"]);
        assert_eq!(rendered(&sol, &sol.side_conditions), ["x'*y"]);
        assert_eq!(sol.indeterminate.len(), 1);
        assert_eq!(sol.indeterminate[0].0.name(), "v1");
        assert_eq!(sol.indeterminate[0].1.render(&sol.free_symbols), "x'*y'");
        assert_eq!(sol.render(), "w = x*y + v1*x'*y'  where x'*y = 0");
        // The development is y/x itself.
        assert_eq!(
            crate::format::format_form(&sol.development),
            "1*x*y + 0*x*y' + (1/0)*x'*y + (0/0)*x'*y'"
        );
    }

    #[test]
    fn solve_trivial_and_superset() {
        let sol = solve_for(&eq("1*w = x"), &sym("w")).unwrap();
        assert_eq!(sol.render(), "w = x");
        assert_eq!(rendered(&sol, &sol.excluded), ["x'"]);

        let sol = solve_for(&eq("x*w = x"), &sym("w")).unwrap();
        assert_eq!(sol.render(), "w = x + v1*x'");
        assert!(sol.side_conditions.is_empty());
    }

    #[test]
    fn solve_errors() {
        assert_eq!(
            solve_for(&eq("x*w = y"), &sym("q")),
            Err(Error::SymbolNotPresent("q".into()))
        );
        assert_eq!(
            solve_for(&eq("v1*w = y"), &sym("w")),
            Err(Error::NameCollision("v1".into()))
        );
        assert!(matches!(
            solve_for(&eq("w = y/x"), &sym("w")),
            Err(Error::UninterpretableNesting { .. })
        ));
    }

    #[test]
    fn solve_is_deterministic() {
        let e = eq("x*w + y*w' = z*w");
        assert_eq!(solve_for(&e, &sym("w")), solve_for(&e, &sym("w")));
    }

    #[test]
    fn fresh_names_follow_mask_order() {
        // 0 = 0 in w: every constituent indeterminate.
        let sol = solve_for(&eq("w*(x - x) + y*0 = 0"), &sym("w")).unwrap();
        let names: Vec<_> = sol
            .indeterminate
            .iter()
            .map(|(v, _)| v.to_string())
            .collect();
        assert_eq!(names, ["v1", "v2", "v3", "v4"]);
        let masks: Vec<_> = sol.indeterminate.iter().map(|(_, c)| c.mask()).collect();
        assert_eq!(masks, [0, 1, 2, 3]);
    }

    #[test]
    fn barbara() {
        let out = syllogism(&[eq("x*y' = 0"), eq("y*z' = 0")], &[sym("y")], None).unwrap();
        match out {
            SyllogismOutcome::Residual(r) => assert_eq!(r.to_string(), "x*z' = 0"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syllogism_solve() {
        let out = syllogism(&[eq("x = y")], &[], Some(&sym("x"))).unwrap();
        match out {
            SyllogismOutcome::Solved(s) => {
                assert_eq!(s.render(), "x = y");
                assert_eq!(rendered(&s, &s.excluded), ["y'"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(syllogism(&[], &[], None), Err(Error::EmptyPremises));
        assert_eq!(
            syllogism(&[eq("x = y")], &[sym("z")], None),
            Err(Error::SymbolNotPresent("z".into()))
        );
    }
}
