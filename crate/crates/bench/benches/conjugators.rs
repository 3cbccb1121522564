use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use semireal::group::generate_closure;
use semireal::heisenberg::{gsp_x, gsp_y, heisenberg_presentation};
use semireal::semidirect::real_witness_via_lift;
use semireal::sl2::{classify_real, rho, SL2Element};
use semireal::{Rational, Vector};
use semireal_bench::{dense_invertible, heisenberg_samples, poly_samples, sl2_f3_generators, sl2_samples};

fn closure(c: &mut Criterion) {
    let gens = sl2_f3_generators();
    c.bench_function("closure/sl2_f3_affine", |b| b.iter(|| generate_closure(black_box(&gens), 1_000).unwrap()));
}

fn representation(c: &mut Criterion) {
    let samples = sl2_samples(16, 9);
    let mut group = c.benchmark_group("rho");
    for n in [2usize, 4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| samples.iter().map(|g| rho(g, n)).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let x = SL2Element::diagonal(&Rational::integer(3)).unwrap();
    let mut group = c.benchmark_group("classify_real");
    for n in [3usize, 6] {
        let vs = poly_samples(8, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &vs, |b, vs| {
            b.iter(|| vs.iter().filter(|v| classify_real(&x, v, &Rational::integer(1)).is_ok()).count())
        });
    }
    group.finish();
}

fn lift(c: &mut Criterion) {
    let (x, y, p) = (gsp_x(), gsp_y(), heisenberg_presentation());
    let ns = heisenberg_samples(16);
    c.bench_function("lift/gsp_heisenberg", |b| {
        b.iter(|| ns.iter().map(|n| real_witness_via_lift(&x, n, &p, &y).unwrap()).collect::<Vec<_>>())
    });
}

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for dim in [4usize, 8, 12] {
        let m = dense_invertible(dim);
        let rhs = Vector::new((0..dim).map(|i| Rational::integer(i as i64 - 2)).collect());
        group.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, _| {
            b.iter(|| m.solve(black_box(&rhs)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, closure, representation, classify, lift, solve);
criterion_main!(benches);
