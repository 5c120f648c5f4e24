//! The `boole` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 algebra error,
//! 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;

use boole_core::nyaya::{catuskoti_classify, negation_table};
use boole_core::oracle::{
    self, verify_elimination, verify_solved, Counterexample, EliminationReport, Failure,
    SetAssignment, Subset,
};
use boole_core::{
    analyze, combine_premises, constituent::display_order, eliminate_over, expand, format_expr,
    format_form, format_form_compact, parse_equation, parse_expression, solve_for_over,
    Constituent, EliminationResult, Equation, Error, ExtCoeff, LinearForm, ParseError, Rational,
    SolvedClass, Symbol, SymbolList, VerificationReport,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod json;

use json::Coefficient;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ALGEBRA: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "boole", version, about = "Boole's algebra of elective symbols")]
pub struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Ordered symbol list, e.g. `x,y,z`. Defaults to the free symbols of
    /// the input in order of first occurrence.
    #[arg(long, global = true, value_name = "a,b,c")]
    symbols: Option<String>,

    /// Largest universe used by oracle verification.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_MAX_UNIVERSE, value_name = "M")]
    max_universe: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Develop an expression into its constituents.
    Expand { expression: String },
    /// Solve an equation for one symbol.
    Solve {
        equation: String,
        #[arg(long = "for", value_name = "SYMBOL")]
        unknown: String,
        /// Check the solution against every model up to --max-universe.
        #[arg(long)]
        verify: bool,
    },
    /// Eliminate symbols from an equation.
    Eliminate {
        equation: String,
        #[arg(long, value_name = "a,b", required = true)]
        drop: String,
        #[arg(long)]
        verify: bool,
    },
    /// Combine premises, eliminate middle terms, optionally solve.
    Syllogism {
        #[arg(
            short = 'p',
            long = "premise",
            value_name = "EQUATION",
            required = true
        )]
        premises: Vec<String>,
        #[arg(long, value_name = "a,b", default_value = "")]
        drop: String,
        #[arg(long = "for", value_name = "SYMBOL")]
        conclude_for: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// List the constituents of --symbols and check that they sum to 1.
    Partition,
    /// Report where an expression fails to denote a class.
    Compare { expression: String },
    /// Check that an equation holds in every model.
    Check { equation: String },
    /// Three-valued negation and the four-cornered classification.
    Nyaya {
        #[command(subcommand)]
        command: NyayaCommand,
    },
}

#[derive(Debug, Subcommand)]
enum NyayaCommand {
    /// The negation table over P, N, U.
    Table,
    /// Classify an element relative to a property P.
    Classify {
        #[arg(long, action = clap::ArgAction::Set, value_name = "BOOL")]
        in_p: bool,
        #[arg(long, action = clap::ArgAction::Set, value_name = "BOOL")]
        in_discourse: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failed {
    Usage(String),
    Parse(ParseError),
    Algebra(Error),
    /// Verification ran and failed; the report is still printed.
    Verify(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Algebra(e)
    }
}

impl From<ParseError> for Failed {
    fn from(e: ParseError) -> Self {
        Failed::Parse(e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = String::new();
    let result = execute(&cli, &mut out);
    let (code, stderr) = match result {
        Ok(()) => (EXIT_OK, String::new()),
        Err(Failed::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failed::Parse(e)) => (EXIT_USAGE, format!("error: {e}\n")),
        Err(Failed::Algebra(e)) => (EXIT_ALGEBRA, format!("error: {}\n", describe(&e))),
        Err(Failed::Verify(msg)) => (EXIT_VERIFY, format!("error: {msg}\n")),
    };
    Outcome {
        code,
        stdout: out,
        stderr,
    }
}

fn describe(e: &Error) -> String {
    let kind = match e {
        Error::SymbolLimitExceeded { .. } => "SymbolLimitExceeded",
        Error::EmptySymbolList => "EmptySymbolList",
        Error::InvalidSymbol(_) => "InvalidSymbol",
        Error::DuplicateSymbol(_) => "DuplicateSymbol",
        Error::UnboundSymbol(_) => "UnboundSymbol",
        Error::SymbolNotPresent(_) => "SymbolNotPresent",
        Error::NameCollision(_) => "NameCollision",
        Error::SymbolListMismatch { .. } => "SymbolListMismatch",
        Error::UninterpretableNesting { .. } => "UninterpretableNesting",
        Error::Overflow { .. } => "Overflow",
        Error::EmptyPremises => "EmptyPremises",
        Error::NotInterpretable { .. } => "NotInterpretable",
        Error::QuotientInOracle => "QuotientInOracle",
        Error::UniverseTooLarge { .. } => "UniverseTooLarge",
        Error::InvalidFlags => "InvalidFlags",
    };
    format!("{kind}: {e}")
}

fn symbol_arg(name: &str) -> Result<Symbol, Failed> {
    Symbol::new(name.trim()).map_err(|_| Failed::Usage(format!("invalid symbol name `{name}`")))
}

fn symbol_list_arg(text: &str) -> Result<SymbolList, Failed> {
    SymbolList::parse(text).map_err(|e| Failed::Usage(format!("bad symbol list `{text}`: {e}")))
}

impl GlobalArgs {
    fn symbols_or(&self, default: SymbolList) -> Result<SymbolList, Failed> {
        match &self.symbols {
            Some(text) => symbol_list_arg(text),
            None => Ok(default),
        }
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), Failed> {
    let g = &cli.global;
    if g.max_universe > oracle::MAX_UNIVERSE {
        return Err(Failed::Usage(format!(
            "--max-universe must be at most {}",
            oracle::MAX_UNIVERSE
        )));
    }
    match &cli.command {
        Command::Expand { expression } => cmd_expand(g, expression, out),
        Command::Solve {
            equation,
            unknown,
            verify,
        } => cmd_solve(g, equation, unknown, *verify, out),
        Command::Eliminate {
            equation,
            drop,
            verify,
        } => cmd_eliminate(g, equation, drop, *verify, out),
        Command::Syllogism {
            premises,
            drop,
            conclude_for,
            verify,
        } => cmd_syllogism(g, premises, drop, conclude_for.as_deref(), *verify, out),
        Command::Partition => cmd_partition(g, out),
        Command::Compare { expression } => cmd_compare(g, expression, out),
        Command::Check { equation } => cmd_check(g, equation, out),
        Command::Nyaya { command } => cmd_nyaya(g, command, out),
    }
}

fn emit<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("serialisable output"));
    out.push('\n');
}

fn coefficient_kind(c: ExtCoeff) -> &'static str {
    match c {
        ExtCoeff::Finite(_) if c.is_class_valued() => "class",
        ExtCoeff::Finite(_) => "number",
        ExtCoeff::Indeterminate => "indeterminate",
        ExtCoeff::Infinite(_) => "infinite",
    }
}

fn term_lines(f: &LinearForm) -> Vec<json::Term> {
    f.iter()
        .map(|(c, k)| json::Term {
            mask: c.mask(),
            constituent: c.render(f.symbols()),
            coefficient: Coefficient(k),
            kind: coefficient_kind(k),
        })
        .collect()
}

fn cmd_expand(g: &GlobalArgs, text: &str, out: &mut String) -> Result<(), Failed> {
    let e = parse_expression(text)?;
    let symbols = g.symbols_or(e.free_symbols())?;
    let f = expand(&e, &symbols)?;
    let developed = format_form(&f);
    let interpretable = f.is_interpretable();
    if g.json {
        emit(
            out,
            &json::Expand {
                command: "expand",
                expression: format_expr(&e),
                symbols: names(&symbols),
                terms: term_lines(&f),
                developed,
                interpretable,
            },
        );
        return Ok(());
    }
    let rows: Vec<(String, &str)> = f
        .iter()
        .map(|(c, k)| {
            let coeff = boole_core::format::format_coefficient(k);
            let term = if symbols.is_empty() {
                coeff
            } else {
                format!("{coeff}*{}", c.render(&symbols))
            };
            let flag = match k {
                ExtCoeff::Indeterminate => "[0/0 indeterminate]",
                ExtCoeff::Infinite(_) => "[k/0 infinite]",
                _ => "",
            };
            (term, flag)
        })
        .collect();
    let width = rows.iter().map(|(t, _)| t.len()).max().unwrap_or(0);
    for (term, flag) in rows {
        if flag.is_empty() {
            let _ = writeln!(out, "{term}");
        } else {
            let _ = writeln!(out, "{term:<width$}  {flag}");
        }
    }
    let _ = writeln!(out, "= {developed}");
    out.push_str(if interpretable {
        "interpretable\n"
    } else {
        "NOT-INTERPRETABLE\n"
    });
    Ok(())
}

fn names(symbols: &SymbolList) -> Vec<String> {
    symbols.iter().map(|s| s.to_string()).collect()
}

fn render_subset(s: Subset) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|i| s >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

fn render_assignment(a: &SetAssignment) -> String {
    let parts: Vec<String> = a
        .bindings()
        .iter()
        .map(|(s, v)| format!("{s}={}", render_subset(*v)))
        .collect();
    format!("m={} {}", a.universe().size(), parts.join(" "))
}

fn render_counterexample(c: &Counterexample) -> String {
    let kind = match c.failure {
        Failure::Unsound => "assembled value is not a solution",
        Failure::Incomplete => "solution not produced by any choice of the v's",
    };
    format!("{kind}: {}", render_assignment(&c.assignment))
}

fn verdict_line(r: &VerificationReport) -> String {
    let mut s = format!(
        "verified on universes 1..{}: {}, {}",
        r.max_universe,
        if r.sound { "sound" } else { "UNSOUND" },
        if r.complete { "complete" } else { "INCOMPLETE" }
    );
    if let Some(c) = &r.counterexample {
        let _ = write!(s, " ({})", render_counterexample(c));
    }
    s
}

fn elimination_verdict(r: &EliminationReport) -> String {
    let mut s = format!(
        "verified on universes 1..{}: {}",
        r.max_universe,
        match (r.sound, r.exact) {
            (true, true) => "exact",
            (true, false) => "sound, NOT EXACT",
            _ => "UNSOUND",
        }
    );
    if let Some(a) = &r.counterexample {
        let _ = write!(s, " (counterexample: {})", render_assignment(a));
    }
    s
}

fn constituent_names(cs: &[Constituent], symbols: &SymbolList) -> Vec<String> {
    cs.iter().map(|c| c.render(symbols)).collect()
}

fn solved_json(sol: &SolvedClass, report: Option<&VerificationReport>) -> json::Solved {
    json::Solved {
        command: "solve",
        unknown: sol.unknown.to_string(),
        symbols: names(&sol.free_symbols),
        solution: sol.render(),
        included: constituent_names(&sol.included, &sol.free_symbols),
        indeterminate: sol
            .indeterminate
            .iter()
            .map(|(v, c)| json::Indeterminate {
                name: v.to_string(),
                constituent: c.render(&sol.free_symbols),
            })
            .collect(),
        side_conditions: constituent_names(&sol.side_conditions, &sol.free_symbols),
        excluded: constituent_names(&sol.excluded, &sol.free_symbols),
        development: term_lines(&sol.development),
        verification: report.map(|r| json::Verification {
            max_universe: r.max_universe,
            sound: r.sound,
            complete: r.complete,
            counterexample: r.counterexample.as_ref().map(render_counterexample),
        }),
    }
}

fn print_solved(
    g: &GlobalArgs,
    sol: &SolvedClass,
    eq: &Equation,
    verify: bool,
    out: &mut String,
) -> Result<(), Failed> {
    let report = if verify {
        Some(verify_solved(sol, eq, g.max_universe)?)
    } else {
        None
    };
    if g.json {
        emit(out, &solved_json(sol, report.as_ref()));
    } else {
        let _ = writeln!(out, "{}", sol.render());
        if let Some(r) = &report {
            let _ = writeln!(out, "{}", verdict_line(r));
        }
    }
    match report {
        Some(r) if !r.passed() => Err(Failed::Verify(verdict_line(&r))),
        _ => Ok(()),
    }
}

fn cmd_solve(
    g: &GlobalArgs,
    text: &str,
    unknown: &str,
    verify: bool,
    out: &mut String,
) -> Result<(), Failed> {
    let eq = parse_equation(text)?;
    let unknown = symbol_arg(unknown)?;
    if !eq.mentions(&unknown) {
        return Err(Error::SymbolNotPresent(unknown.to_string()).into());
    }
    let over = g.symbols_or(eq.free_symbols())?.without(&unknown);
    let sol = solve_for_over(&eq, &unknown, &over)?;
    print_solved(g, &sol, &eq, verify, out)
}

/// Eliminates `drop` left to right, tracking the remaining symbol list.
fn eliminate_all(
    eq: &Equation,
    mut symbols: SymbolList,
    drop: &[Symbol],
) -> Result<(EliminationResult, SymbolList), Failed> {
    for d in drop {
        if !symbols.contains(d) {
            return Err(Error::SymbolNotPresent(d.to_string()).into());
        }
    }
    let mut current = eq.clone();
    let mut result = None;
    for d in drop {
        let remaining = symbols.without(d);
        let r = eliminate_over(&current, d, &remaining)?;
        current = r.residual.clone();
        result = Some(r);
        symbols = remaining;
    }
    let result = match result {
        Some(r) => r,
        None => {
            let f = expand(&eq.homogeneous_form(), &symbols)?;
            EliminationResult {
                residual: Equation::new(f.to_expr()?, boole_core::Expr::zero()),
                form: f,
            }
        }
    };
    Ok((result, symbols))
}

fn drop_list(text: &str) -> Result<Vec<Symbol>, Failed> {
    Ok(symbol_list_arg(text)?.iter().cloned().collect())
}

fn print_residual(
    g: &GlobalArgs,
    command: &'static str,
    r: &EliminationResult,
    dropped: &[Symbol],
    report: Option<&EliminationReport>,
    out: &mut String,
) {
    let residual = format!("{} = 0", format_form_compact(&r.form));
    if g.json {
        emit(
            out,
            &json::Residual {
                command,
                dropped: dropped.iter().map(|s| s.to_string()).collect(),
                symbols: names(r.form.symbols()),
                residual,
                terms: term_lines(&r.form),
                trivial: r.is_trivial(),
                contradictory: r.is_contradictory(),
                verification: report.map(|v| json::EliminationVerification {
                    max_universe: v.max_universe,
                    sound: v.sound,
                    exact: v.exact,
                    counterexample: v.counterexample.as_ref().map(render_assignment),
                }),
            },
        );
    } else {
        let _ = writeln!(out, "{residual}");
        if let Some(v) = report {
            let _ = writeln!(out, "{}", elimination_verdict(v));
        }
    }
}

fn check_elimination(report: Option<EliminationReport>) -> Result<(), Failed> {
    match report {
        Some(r) if !(r.sound && r.exact) => Err(Failed::Verify(elimination_verdict(&r))),
        _ => Ok(()),
    }
}

fn cmd_eliminate(
    g: &GlobalArgs,
    text: &str,
    drop: &str,
    verify: bool,
    out: &mut String,
) -> Result<(), Failed> {
    let eq = parse_equation(text)?;
    let drop = drop_list(drop)?;
    for d in &drop {
        if !eq.mentions(d) {
            return Err(Error::SymbolNotPresent(d.to_string()).into());
        }
    }
    let symbols = g.symbols_or(eq.free_symbols())?;
    let (r, _) = eliminate_all(&eq, symbols, &drop)?;
    let report = if verify {
        Some(verify_elimination(
            std::slice::from_ref(&eq),
            &drop,
            &r.residual,
            g.max_universe,
        )?)
    } else {
        None
    };
    print_residual(g, "eliminate", &r, &drop, report.as_ref(), out);
    check_elimination(report)
}

fn cmd_syllogism(
    g: &GlobalArgs,
    texts: &[String],
    drop: &str,
    conclude_for: Option<&str>,
    verify: bool,
    out: &mut String,
) -> Result<(), Failed> {
    let premises = texts
        .iter()
        .map(|t| parse_equation(t))
        .collect::<Result<Vec<_>, _>>()?;
    let drop = drop_list(drop)?;
    let combined = combine_premises(&premises)?;
    let symbols = g.symbols_or(combined.free_symbols())?;
    let (r, remaining) = eliminate_all(&combined, symbols, &drop)?;
    match conclude_for {
        None => {
            let report = if verify {
                Some(verify_elimination(
                    &premises,
                    &drop,
                    &r.residual,
                    g.max_universe,
                )?)
            } else {
                None
            };
            print_residual(g, "syllogism", &r, &drop, report.as_ref(), out);
            check_elimination(report)
        }
        Some(name) => {
            let unknown = symbol_arg(name)?;
            if !remaining.contains(&unknown) {
                return Err(Error::SymbolNotPresent(unknown.to_string()).into());
            }
            let over = remaining.without(&unknown);
            let sol = solve_for_over(&r.residual, &unknown, &over)?;
            print_solved(g, &sol, &r.residual, verify, out)
        }
    }
}

fn cmd_partition(g: &GlobalArgs, out: &mut String) -> Result<(), Failed> {
    let text = g
        .symbols
        .as_deref()
        .ok_or_else(|| Failed::Usage("partition needs --symbols".into()))?;
    let symbols = symbol_list_arg(text)?;
    let listed = boole_core::constituents(&symbols)?;
    let sum = listed
        .iter()
        .map(|c| c.to_expr(&symbols))
        .reduce(|a, b| a + b)
        .expect("at least one constituent");
    let total = expand(&sum, &symbols)?;
    let ok = total == LinearForm::constant(&symbols, Rational::ONE)?;
    let ordered: Vec<Constituent> = display_order(symbols.len()).collect();
    if g.json {
        emit(
            out,
            &json::Partition {
                command: "partition",
                symbols: names(&symbols),
                constituents: ordered
                    .iter()
                    .map(|c| json::Region {
                        mask: c.mask(),
                        constituent: c.render(&symbols),
                    })
                    .collect(),
                sum_is_one: ok,
            },
        );
    } else {
        for c in &ordered {
            let _ = writeln!(out, "{}", c.render(&symbols));
        }
        let _ = writeln!(out, "sum = 1: {}", if ok { "OK" } else { "FAILED" });
    }
    if ok {
        Ok(())
    } else {
        Err(Failed::Verify("constituents do not sum to 1".into()))
    }
}

fn cmd_compare(g: &GlobalArgs, text: &str, out: &mut String) -> Result<(), Failed> {
    let e = parse_expression(text)?;
    let symbols = g.symbols_or(e.free_symbols())?;
    let report = analyze(&e, Some(&symbols))?;
    let conditions: Vec<(String, Option<String>)> = report
        .interpretability_conditions
        .iter()
        .map(|c| (format!("{} = 0", c.render(&symbols)), report.gloss(*c)))
        .collect();
    if g.json {
        emit(
            out,
            &json::Compare {
                command: "compare",
                expression: format_expr(&e),
                symbols: names(&symbols),
                interpretable: report.is_interpretable(),
                offending: report
                    .offending
                    .iter()
                    .map(|(c, k)| json::Offending {
                        constituent: c.render(&symbols),
                        coefficient: Coefficient(*k),
                    })
                    .collect(),
                conditions: conditions
                    .iter()
                    .map(|(c, gloss)| json::Condition {
                        condition: c.clone(),
                        reading: gloss.clone(),
                    })
                    .collect(),
            },
        );
        return Ok(());
    }
    let _ = writeln!(out, "{}", format_expr(&e));
    if report.is_interpretable() {
        out.push_str("offending: none\ninterpretable: denotes a class\n");
        return Ok(());
    }
    for (c, k) in &report.offending {
        let _ = writeln!(out, "offending: ({}, {k})", c.render(&symbols));
    }
    for (c, gloss) in &conditions {
        match gloss {
            Some(reading) => {
                let _ = writeln!(out, "condition: {c} ({reading})");
            }
            None => {
                let _ = writeln!(out, "condition: {c}");
            }
        }
    }
    Ok(())
}

fn cmd_check(g: &GlobalArgs, text: &str, out: &mut String) -> Result<(), Failed> {
    let eq = parse_equation(text)?;
    let symbols = g.symbols_or(eq.free_symbols())?;
    let f = expand(&eq.homogeneous_form(), &symbols)?;
    let algebraic = f.is_zero();
    let failing: Vec<String> = f
        .iter()
        .filter(|(_, k)| *k != ExtCoeff::ZERO)
        .map(|(c, _)| c.render(&symbols))
        .collect();
    let counterexample = oracle_counterexample(&eq, &symbols, g.max_universe)?;
    let semantic = counterexample.is_none();
    if g.json {
        emit(
            out,
            &json::Check {
                command: "check",
                equation: format!("{} = {}", format_expr(&eq.lhs), format_expr(&eq.rhs)),
                symbols: names(&symbols),
                identity: algebraic,
                failing_constituents: failing.clone(),
                max_universe: g.max_universe,
                holds_in_all_models: semantic,
                counterexample: counterexample.as_ref().map(render_assignment),
            },
        );
    } else {
        let _ = writeln!(out, "identity: {}", if algebraic { "yes" } else { "no" });
        if !algebraic {
            let _ = writeln!(out, "fails on: {}", failing.join(", "));
        }
        let _ = write!(out, "models up to size {}: ", g.max_universe);
        match &counterexample {
            None => out.push_str("all satisfy it\n"),
            Some(a) => {
                let _ = writeln!(out, "counterexample {}", render_assignment(a));
            }
        }
    }
    if algebraic != semantic {
        return Err(Failed::Verify("algebra and set semantics disagree".into()));
    }
    if algebraic {
        Ok(())
    } else {
        Err(Failed::Verify("equation is not an identity".into()))
    }
}

fn oracle_counterexample(
    eq: &Equation,
    symbols: &SymbolList,
    max_m: usize,
) -> Result<Option<SetAssignment>, Failed> {
    const BUDGET: usize = 20;
    if symbols.len() * max_m > BUDGET {
        return Err(Error::UniverseTooLarge {
            size: max_m,
            max: BUDGET / symbols.len(),
        }
        .into());
    }
    for m in 1..=max_m {
        let universe = boole_core::Universe::new(m)?;
        for i in 0..1usize << (m * symbols.len()) {
            let mut a = SetAssignment::new(universe);
            for (j, s) in symbols.iter().enumerate() {
                a.set(s.clone(), (i >> (j * m)) as u32 & universe.full());
            }
            if !oracle::holds(eq, &a)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

fn cmd_nyaya(g: &GlobalArgs, command: &NyayaCommand, out: &mut String) -> Result<(), Failed> {
    match command {
        NyayaCommand::Table => {
            let rows = negation_table();
            if g.json {
                emit(
                    out,
                    &json::NyayaTable {
                        command: "nyaya-table",
                        rows: rows
                            .iter()
                            .map(|(w, n)| json::NyayaRow {
                                w: w.to_string(),
                                not_w: n.to_string(),
                                meaning: w.name(),
                            })
                            .collect(),
                    },
                );
            } else {
                out.push_str("w  not-w\n");
                for (w, n) in rows {
                    let _ = writeln!(out, "{w}  {n}");
                }
            }
        }
        NyayaCommand::Classify { in_p, in_discourse } => {
            let region = catuskoti_classify(*in_p, *in_discourse)?;
            if g.json {
                emit(
                    out,
                    &json::NyayaClass {
                        command: "nyaya-classify",
                        in_p: *in_p,
                        in_discourse: *in_discourse,
                        region: region.to_string(),
                    },
                );
            } else {
                let _ = writeln!(out, "{region}");
            }
        }
    }
    Ok(())
}
