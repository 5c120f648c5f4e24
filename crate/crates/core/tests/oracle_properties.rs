mod common;

use boole_core::expr::symbols;
use boole_core::oracle::{eval_numeric, holds, verify_elimination, Subset};
use boole_core::{
    analyze, b_and, b_not, b_or, combine_premises, constituents, eliminate, expand, lf_add, lf_mul,
    lf_sub, solve_for, verify_solved, Constituent, Equation, Expr, ExtCoeff, LinearForm,
    SetAssignment, Symbol, SymbolList, Universe,
};
use proptest::prelude::*;

fn sym(n: &str) -> Symbol {
    Symbol::new(n).unwrap()
}

fn assignment(m: usize, syms: &SymbolList, sets: &[Subset]) -> SetAssignment {
    let mut a = SetAssignment::new(Universe::new(m).unwrap());
    for (s, v) in syms.iter().zip(sets) {
        a.set(s.clone(), *v);
    }
    a
}

fn sets(count: usize, m: usize) -> impl Strategy<Value = Vec<Subset>> {
    prop::collection::vec(0..(1u32 << m), count)
}

fn universe_and_sets(count: usize) -> impl Strategy<Value = (usize, Vec<Subset>)> {
    (1usize..=4).prop_flat_map(move |m| (Just(m), sets(count, m)))
}

/// Interpretable forms over `syms`, indexed by the bitmask of included
/// constituents.
fn class_form(syms: &SymbolList, bits: u32) -> LinearForm {
    let n = 1usize << syms.len();
    let coeffs = (0..n)
        .map(|i| {
            if bits >> i & 1 == 1 {
                ExtCoeff::ONE
            } else {
                ExtCoeff::ZERO
            }
        })
        .collect();
    LinearForm::from_coefficients(syms.clone(), coeffs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn oracle_agrees_with_expansion(e in common::division_free(), (m, s) in universe_and_sets(4)) {
        let syms = common::all_symbols();
        let f = expand(&e, &syms).unwrap();
        let a = assignment(m, &syms, &s);
        for element in 0..m {
            let containing: Vec<Constituent> = constituents(&syms)
                .unwrap()
                .into_iter()
                .filter(|c| a.region(*c, &syms).unwrap() >> element & 1 == 1)
                .collect();
            prop_assert_eq!(containing.len(), 1);
            let value = eval_numeric(&e, &a, element).unwrap();
            prop_assert_eq!(f.coeff(containing[0]), ExtCoeff::Finite(value));
        }
    }

    #[test]
    fn interpretable_iff_class_valued_everywhere(e in common::division_free_over(&["x", "y"], 4)) {
        let syms = symbols(&["x", "y"]).unwrap();
        let interpretable = expand(&e, &syms).unwrap().is_interpretable();
        // A universe of four elements realises every vertex at once.
        let a = assignment(4, &syms, &[0b1010, 0b1100]);
        let class_valued = (0..4).all(|i| {
            let v = eval_numeric(&e, &a, i).unwrap();
            v.is_zero() || v.is_one()
        });
        prop_assert_eq!(interpretable, class_valued);
        prop_assert_eq!(analyze(&e, Some(&syms)).unwrap().offending.is_empty(), interpretable);
    }

    #[test]
    fn squares_vanish_together(
        fs in prop::collection::vec(common::division_free_over(&["x", "y", "z"], 4), 1..4)
    ) {
        let syms = symbols(&["x", "y", "z"]).unwrap();
        let premises: Vec<Equation> = fs.iter().map(|f| Equation::new(f.clone(), Expr::zero())).collect();
        let combined = expand(&combine_premises(&premises).unwrap().lhs, &syms).unwrap();
        let parts: Vec<LinearForm> = fs.iter().map(|f| expand(f, &syms).unwrap()).collect();
        for (c, k) in combined.iter() {
            let all_zero = parts.iter().all(|p| p.coeff(c) == ExtCoeff::ZERO);
            prop_assert_eq!(k == ExtCoeff::ZERO, all_zero);
        }
    }

    #[test]
    fn solutions_are_sound_and_complete(
        lhs in common::division_free_over(&["x", "y", "w"], 4),
        rhs in common::division_free_over(&["x", "y", "w"], 3),
    ) {
        let eq = Equation::new(lhs + Expr::sym("w") * Expr::zero(), rhs);
        let sol = solve_for(&eq, &sym("w")).unwrap();
        let report = verify_solved(&sol, &eq, 3).unwrap();
        prop_assert!(report.passed(), "{} gave {}: {:?}", eq, sol.render(), report);
    }

    #[test]
    fn elimination_is_exact(
        f in common::division_free_over(&["x", "y", "w"], 4),
    ) {
        let eq = Equation::new(f + Expr::sym("w") * Expr::zero(), Expr::zero());
        let r = eliminate(&eq, &sym("w")).unwrap();
        let report = verify_elimination(&[eq], &[sym("w")], &r.residual, 3).unwrap();
        prop_assert!(report.sound && report.exact, "{:?}", report);
    }

    #[test]
    fn linear_elimination_with_class_coefficients(a_bits in 0u32..16, b_bits in 0u32..16) {
        let syms = symbols(&["x", "y"]).unwrap();
        let a = class_form(&syms, a_bits).to_expr().unwrap();
        let b = class_form(&syms, b_bits).to_expr().unwrap();
        let w = Expr::sym("w");
        let f = a.clone() * w.clone() + b.clone() * w.compl();
        let eq = Equation::new(f, Expr::zero());
        let r = eliminate(&eq, &sym("w")).unwrap();
        // The residual is a*b.
        let ab = lf_mul(&expand(&a, &syms).unwrap(), &expand(&b, &syms).unwrap()).unwrap();
        prop_assert_eq!(expand(&r.residual.lhs, &syms).unwrap(), ab);
        let report = verify_elimination(&[eq], &[sym("w")], &r.residual, 3).unwrap();
        prop_assert!(report.exact);
    }

    #[test]
    fn solving_is_deterministic(e in common::division_free_over(&["x", "y", "w"], 4)) {
        let eq = Equation::new(e + Expr::sym("w") * Expr::zero(), Expr::zero());
        prop_assert_eq!(solve_for(&eq, &sym("w")), solve_for(&eq, &sym("w")));
    }
}

#[test]
fn boolean_lattice_on_two_symbols() {
    let syms = symbols(&["x", "y"]).unwrap();
    let forms: Vec<LinearForm> = (0..16).map(|b| class_form(&syms, b)).collect();
    let zero = class_form(&syms, 0);
    let one = class_form(&syms, 15);
    for f in &forms {
        assert_eq!(b_or(f, &zero).unwrap(), *f);
        assert_eq!(b_and(f, &one).unwrap(), *f);
        assert_eq!(b_or(f, &b_not(f).unwrap()).unwrap(), one);
        assert_eq!(b_and(f, &b_not(f).unwrap()).unwrap(), zero);
        assert_eq!(b_not(&b_not(f).unwrap()).unwrap(), *f);
        assert_eq!(b_or(f, f).unwrap(), *f);
        for g in &forms {
            assert_eq!(b_or(f, g).unwrap(), b_or(g, f).unwrap());
            assert_eq!(b_and(f, g).unwrap(), b_and(g, f).unwrap());
            assert_eq!(b_or(f, &b_and(f, g).unwrap()).unwrap(), *f);
            assert_eq!(b_and(f, &b_or(f, g).unwrap()).unwrap(), *f);
            assert_eq!(
                b_not(&b_or(f, g).unwrap()).unwrap(),
                b_and(&b_not(f).unwrap(), &b_not(g).unwrap()).unwrap()
            );
            for h in &forms {
                assert_eq!(
                    b_and(f, &b_or(g, h).unwrap()).unwrap(),
                    b_or(&b_and(f, g).unwrap(), &b_and(f, h).unwrap()).unwrap()
                );
                assert_eq!(
                    b_or(f, &b_and(g, h).unwrap()).unwrap(),
                    b_and(&b_or(f, g).unwrap(), &b_or(f, h).unwrap()).unwrap()
                );
                assert_eq!(
                    b_or(f, &b_or(g, h).unwrap()).unwrap(),
                    b_or(&b_or(f, g).unwrap(), h).unwrap()
                );
            }
        }
    }
}

#[test]
fn boole_sum_and_difference_agree_only_under_their_conditions() {
    let syms = symbols(&["x", "y"]).unwrap();
    let forms: Vec<LinearForm> = (0..16).map(|b| class_form(&syms, b)).collect();
    for f in &forms {
        for g in &forms {
            let disjoint = lf_mul(f, g).unwrap().is_zero();
            assert_eq!(lf_add(f, g).unwrap() == b_or(f, g).unwrap(), disjoint);
            let contained = b_and(f, g).unwrap() == *g;
            assert_eq!(
                lf_sub(f, g).unwrap() == b_and(f, &b_not(g).unwrap()).unwrap(),
                contained
            );
        }
    }
}

#[test]
fn unit_partition_identities_hold_in_every_model() {
    let one = Expr::one();
    let x = Expr::sym("x");
    let y = Expr::sym("y");
    let z = Expr::sym("z");
    let c = |e: Expr| Expr::one() - e;
    let two_way = Equation::new(one.clone(), x.clone() + c(x.clone()));
    let four_way = Equation::new(
        one.clone(),
        x.clone() * y.clone()
            + x.clone() * c(y.clone())
            + c(x.clone()) * y.clone()
            + c(x.clone()) * c(y.clone()),
    );
    let eight_way = Equation::new(
        one,
        x.clone() * y.clone() * z.clone()
            + x.clone() * y.clone() * c(z.clone())
            + x.clone() * c(y.clone()) * z.clone()
            + c(x.clone()) * y.clone() * z.clone()
            + x.clone() * c(y.clone()) * c(z.clone())
            + c(x.clone()) * y.clone() * c(z.clone())
            + c(x.clone()) * c(y.clone()) * z.clone()
            + c(x) * c(y) * c(z),
    );
    let syms = symbols(&["x", "y", "z"]).unwrap();
    for m in 0..=4 {
        let count = 1usize << (3 * m);
        for i in 0..count {
            let s: Vec<Subset> = (0..3)
                .map(|j| ((i >> (j * m)) as u32) & ((1 << m) - 1))
                .collect();
            let a = assignment(m, &syms, &s);
            for eq in [&two_way, &four_way, &eight_way] {
                assert!(holds(eq, &a).unwrap());
            }
        }
    }
}
