use std::hint::black_box;

use boole_core::form::expand_with;
use boole_core::oracle::{verify_elimination_with, verify_solved_with};
use boole_core::{
    combine_premises, eliminate, parse_equation, solve_for, Execution, Expr, Symbol, SymbolList,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_expand(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand");
    for n in [12usize, 16] {
        let names: Vec<Symbol> = (0..n)
            .map(|i| Symbol::new(&format!("s{i}")).unwrap())
            .collect();
        let symbols = SymbolList::new(names.clone()).unwrap();
        let e = names
            .iter()
            .map(|s| Expr::Sym(s.clone()))
            .reduce(|acc, s| (acc.clone() + s.clone()) * (Expr::one() - acc * s))
            .unwrap();
        for (label, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, _| {
                b.iter(|| expand_with(black_box(&e), &symbols, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_verify_solved(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_solved");
    group.sample_size(10);
    let eq = parse_equation("x*w = y").unwrap();
    let sol = solve_for(&eq, &Symbol::new("w").unwrap()).unwrap();
    for m in [4usize, 6] {
        for (label, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, m), &m, |b, &m| {
                b.iter(|| verify_solved_with(&sol, &eq, m, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_verify_elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_elimination");
    group.sample_size(10);
    let premises = [
        parse_equation("x*y' = 0").unwrap(),
        parse_equation("y*z' = 0").unwrap(),
    ];
    let y = Symbol::new("y").unwrap();
    let residual = eliminate(&combine_premises(&premises).unwrap(), &y)
        .unwrap()
        .residual;
    for m in [3usize, 5] {
        for (label, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, m), &m, |b, &m| {
                b.iter(|| {
                    verify_elimination_with(&premises, std::slice::from_ref(&y), &residual, m, exec)
                        .unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_expand,
    bench_verify_solved,
    bench_verify_elimination
);
criterion_main!(benches);
