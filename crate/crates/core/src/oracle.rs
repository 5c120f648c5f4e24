//! Brute-force set semantics over small explicit universes.
//!
//! Symbols are interpreted as subsets of `{0, .., m-1}` and an expression
//! is evaluated element by element from the indicator values of that
//! element. Nothing here goes through constituent expansion, so the oracle
//! can independently confirm what the algebra derives.

use crate::constituent::Constituent;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::expr::{Equation, Expr};
use crate::inference::SolvedClass;
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolList};

/// Largest universe the oracle enumerates.
pub const MAX_UNIVERSE: usize = 8;
pub const DEFAULT_MAX_UNIVERSE: usize = 4;

/// A subset of a universe, bit `i` for element `i`.
pub type Subset = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    size: usize,
}

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size,
                max: MAX_UNIVERSE,
            });
        }
        Ok(Universe { size })
    }

    pub fn size(self) -> usize {
        self.size
    }

    pub fn full(self) -> Subset {
        (1u32 << self.size) - 1
    }

    /// Number of distinct subsets.
    pub fn subset_count(self) -> usize {
        1usize << self.size
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAssignment {
    universe: Universe,
    sets: Vec<(Symbol, Subset)>,
}

impl SetAssignment {
    pub fn new(universe: Universe) -> Self {
        SetAssignment {
            universe,
            sets: Vec::new(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Binds (or rebinds) `symbol`; bits outside the universe are dropped.
    pub fn with(mut self, symbol: Symbol, subset: Subset) -> Self {
        self.set(symbol, subset);
        self
    }

    pub fn set(&mut self, symbol: Symbol, subset: Subset) {
        let subset = subset & self.universe.full();
        match self.sets.iter_mut().find(|(s, _)| *s == symbol) {
            Some(entry) => entry.1 = subset,
            None => self.sets.push((symbol, subset)),
        }
    }

    pub fn get(&self, symbol: &Symbol) -> Option<Subset> {
        self.sets.iter().find(|(s, _)| s == symbol).map(|(_, v)| *v)
    }

    pub fn bindings(&self) -> &[(Symbol, Subset)] {
        &self.sets
    }

    /// The `index`-th assignment of `symbols` over `universe`, with symbol
    /// `j` taking bits `j*m .. (j+1)*m` of `index`.
    fn enumerated(universe: Universe, symbols: &SymbolList, index: usize) -> Self {
        let m = universe.size();
        let mut a = SetAssignment::new(universe);
        for (j, s) in symbols.iter().enumerate() {
            a.set(s.clone(), ((index >> (j * m)) as u32) & universe.full());
        }
        a
    }

    /// Elements lying in the region of constituent `c` over `symbols`: in
    /// every positive symbol and outside every negative one.
    pub fn region(&self, c: Constituent, symbols: &SymbolList) -> Result<Subset> {
        let mut region = self.universe.full();
        for (i, s) in symbols.iter().enumerate() {
            let set = self
                .get(s)
                .ok_or_else(|| Error::UnboundSymbol(s.to_string()))?;
            region &= if c.is_positive(i) { set } else { !set };
        }
        Ok(region & self.universe.full())
    }
}

fn indicator(set: Subset, element: usize) -> Rational {
    if set >> element & 1 == 1 {
        Rational::ONE
    } else {
        Rational::ZERO
    }
}

/// Value of `e` at one element, from the element's membership in each set.
pub fn eval_numeric(e: &Expr, a: &SetAssignment, element: usize) -> Result<Rational> {
    debug_assert!(element < a.universe.size());
    match e {
        Expr::Const(r) => Ok(*r),
        Expr::Sym(s) => a
            .get(s)
            .map(|set| indicator(set, element))
            .ok_or_else(|| Error::UnboundSymbol(s.to_string())),
        Expr::Add(l, r) => eval_numeric(l, a, element)?.checked_add(eval_numeric(r, a, element)?),
        Expr::Sub(l, r) => eval_numeric(l, a, element)?.checked_sub(eval_numeric(r, a, element)?),
        Expr::Mul(l, r) => eval_numeric(l, a, element)?.checked_mul(eval_numeric(r, a, element)?),
        Expr::Compl(inner) => Rational::ONE.checked_sub(eval_numeric(inner, a, element)?),
        Expr::Quot(..) => Err(Error::QuotientInOracle),
    }
}

/// Whether both sides agree at every element of the universe.
pub fn holds(eq: &Equation, a: &SetAssignment) -> Result<bool> {
    if !eq.is_division_free() {
        return Err(Error::QuotientInOracle);
    }
    for element in 0..a.universe.size() {
        if eval_numeric(&eq.lhs, a, element)? != eval_numeric(&eq.rhs, a, element)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every subset `w` for which `eq` holds when `unknown` is bound to `w`,
/// in ascending bit order.
pub fn enumerate_solutions(
    eq: &Equation,
    unknown: &Symbol,
    a: &SetAssignment,
) -> Result<Vec<Subset>> {
    let mut trial = a.clone();
    let mut out = Vec::new();
    for w in 0..a.universe.subset_count() as Subset {
        trial.set(unknown.clone(), w);
        if holds(eq, &trial)? {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// An assembled `w` does not satisfy the equation.
    Unsound,
    /// A solution of the equation is not produced by any choice of the `vk`.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub failure: Failure,
    pub assignment: SetAssignment,
    /// The offending value of the unknown.
    pub unknown_value: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_universe: usize,
    pub sound: bool,
    pub complete: bool,
    /// The first failure found, smallest universe and assignment first.
    pub counterexample: Option<Counterexample>,
    /// Number of (universe, assignment) pairs examined.
    pub cases: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.sound && self.complete
    }
}

struct CaseOutcome {
    unsound: Option<Counterexample>,
    incomplete: Option<Counterexample>,
}

fn check_solution_case(sol: &SolvedClass, eq: &Equation, a: &SetAssignment) -> Result<CaseOutcome> {
    let symbols = &sol.free_symbols;
    let mut conditions_hold = true;
    for c in &sol.side_conditions {
        if a.region(*c, symbols)? != 0 {
            conditions_hold = false;
        }
    }
    let mut included: Subset = 0;
    for c in &sol.included {
        included |= a.region(*c, symbols)?;
    }
    let mut free: Subset = 0;
    for (_, c) in &sol.indeterminate {
        free |= a.region(*c, symbols)?;
    }

    let solutions = enumerate_solutions(eq, &sol.unknown, a)?;
    let mut outcome = CaseOutcome {
        unsound: None,
        incomplete: None,
    };
    let found = |failure, w| Counterexample {
        failure,
        assignment: a.clone().with(sol.unknown.clone(), w),
        unknown_value: w,
    };

    if conditions_hold {
        // Each vk ranges over subsets of its own region; the regions are
        // disjoint, so the valuations are exactly the subsets of their union.
        let mut v = free;
        loop {
            let w = included | v;
            if solutions.binary_search(&w).is_err() {
                outcome.unsound = Some(found(Failure::Unsound, w));
                break;
            }
            if v == 0 {
                break;
            }
            v = (v - 1) & free;
        }
    }
    for &w in &solutions {
        let realised = conditions_hold && w & included == included && w & !included & !free == 0;
        if !realised {
            outcome.incomplete = Some(found(Failure::Incomplete, w));
            break;
        }
    }
    Ok(outcome)
}

fn assignments_in(universe: Universe, symbol_count: usize) -> usize {
    1usize << (universe.size() * symbol_count)
}

/// Enumeration is over `2^(m * symbols)` assignments; refuse anything that
/// would not finish.
const MAX_ASSIGNMENT_BITS: usize = 30;

fn check_budget(max_m: usize, symbol_count: usize) -> Result<()> {
    if max_m * symbol_count > MAX_ASSIGNMENT_BITS {
        return Err(Error::UniverseTooLarge {
            size: max_m,
            max: MAX_ASSIGNMENT_BITS / symbol_count,
        });
    }
    Ok(())
}

/// Exhaustively checks a solved class against `eq` over every universe of
/// size `1..=max_m`, every assignment of the free symbols and every
/// valuation of the indeterminate classes.
pub fn verify_solved(sol: &SolvedClass, eq: &Equation, max_m: usize) -> Result<VerificationReport> {
    verify_solved_with(sol, eq, max_m, Execution::default())
}

pub fn verify_solved_with(
    sol: &SolvedClass,
    eq: &Equation,
    max_m: usize,
    exec: Execution,
) -> Result<VerificationReport> {
    Universe::new(max_m)?;
    if !eq.is_division_free() {
        return Err(Error::QuotientInOracle);
    }
    let mut report = VerificationReport {
        max_universe: max_m,
        sound: true,
        complete: true,
        counterexample: None,
        cases: 0,
    };
    let n = sol.free_symbols.len();
    check_budget(max_m, n + 1)?;
    for m in 1..=max_m {
        let universe = Universe::new(m)?;
        let count = assignments_in(universe, n);
        let outcomes = exec.try_map_range(count, |i| {
            let a = SetAssignment::enumerated(universe, &sol.free_symbols, i);
            check_solution_case(sol, eq, &a)
        })?;
        report.cases += count;
        for o in outcomes {
            if let Some(c) = o.unsound {
                report.sound = false;
                report.counterexample.get_or_insert(c);
            }
            if let Some(c) = o.incomplete {
                report.complete = false;
                report.counterexample.get_or_insert(c);
            }
        }
        if report.counterexample.is_some() {
            break;
        }
    }
    Ok(report)
}

/// Outcome of comparing an elimination residual with the premises it came
/// from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationReport {
    pub max_universe: usize,
    /// Wherever the premises can be satisfied, the residual holds.
    pub sound: bool,
    /// Wherever the residual holds, the premises can be satisfied.
    pub exact: bool,
    pub counterexample: Option<SetAssignment>,
    pub cases: usize,
}

/// Checks `residual` against `premises` with `dropped` existentially
/// quantified, on every universe of size `1..=max_m`.
pub fn verify_elimination(
    premises: &[Equation],
    dropped: &[Symbol],
    residual: &Equation,
    max_m: usize,
) -> Result<EliminationReport> {
    verify_elimination_with(premises, dropped, residual, max_m, Execution::default())
}

pub fn verify_elimination_with(
    premises: &[Equation],
    dropped: &[Symbol],
    residual: &Equation,
    max_m: usize,
    exec: Execution,
) -> Result<EliminationReport> {
    Universe::new(max_m)?;
    let mut all = SymbolList::default();
    for p in premises {
        all = all.union(&p.free_symbols());
    }
    all = all.union(&residual.free_symbols());
    let mut kept = all.clone();
    let mut hidden = Vec::new();
    for d in dropped {
        kept = kept.without(d);
        if all.contains(d) {
            hidden.push(d.clone());
        }
    }
    let hidden = SymbolList::new(hidden)?;
    check_budget(max_m, kept.len() + hidden.len())?;

    let mut report = EliminationReport {
        max_universe: max_m,
        sound: true,
        exact: true,
        counterexample: None,
        cases: 0,
    };
    for m in 1..=max_m {
        let universe = Universe::new(m)?;
        let count = assignments_in(universe, kept.len());
        let extensions = assignments_in(universe, hidden.len());
        let failure = exec.find_map_first(count, |i| {
            let a = SetAssignment::enumerated(universe, &kept, i);
            let check = || -> Result<Option<(bool, SetAssignment)>> {
                let mut solvable = false;
                for j in 0..extensions {
                    let ext = SetAssignment::enumerated(universe, &hidden, j);
                    let mut full = a.clone();
                    for (s, v) in ext.bindings() {
                        full.set(s.clone(), *v);
                    }
                    let mut ok = true;
                    for p in premises {
                        if !holds(p, &full)? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        solvable = true;
                        break;
                    }
                }
                let residual_holds = holds(residual, &a)?;
                Ok(if solvable == residual_holds {
                    None
                } else {
                    Some((solvable, a.clone()))
                })
            };
            match check() {
                Ok(None) => None,
                Ok(Some(found)) => Some(Ok(found)),
                Err(e) => Some(Err(e)),
            }
        });
        report.cases += count;
        if let Some(found) = failure {
            let (solvable, a) = found?;
            // Premises solvable but residual fails: unsound. Otherwise the
            // residual is merely too weak.
            if solvable {
                report.sound = false;
            }
            report.exact = false;
            report.counterexample = Some(a);
            break;
        }
    }
    Ok(report)
}
