use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use overmex::harness::{verify, Job};
use overmex::series::{gauss_binomial, gauss_theta, overpartition_gf, pochhammer, ThetaTerms};
use overmex::{Enumerator, Form, ParamName, Params, PochSpec};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [100usize, 400] {
        let a = overpartition_gf(order);
        let b = gauss_theta(ThetaTerms::Infinite, order);
        g.bench_with_input(BenchmarkId::new("mul", order), &order, |bench, _| {
            bench.iter(|| black_box(&a) * black_box(&b))
        });
        g.bench_with_input(BenchmarkId::new("pochhammer_inf", order), &order, |bench, &n| {
            bench.iter(|| pochhammer(PochSpec::neg_q(1, overmex::PochLength::Infinite), black_box(n)).unwrap())
        });
    }
    g.bench_function("gauss_binomial_20_10", |bench| {
        bench.iter(|| gauss_binomial(black_box(20), black_box(10), 100))
    });
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let e = Enumerator::default();
    let mut g = c.benchmark_group("enumeration");
    for n in [15u32, 20] {
        g.bench_with_input(BenchmarkId::new("count_overpartitions", n), &n, |bench, &n| {
            bench.iter(|| e.count_overpartitions(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("op21", n), &n, |bench, &n| bench.iter(|| e.op21(black_box(n), 1).unwrap()));
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let e = Enumerator::default();
    let k2 = Params::none().with(ParamName::K, 2);
    let jobs = [
        ("guo-zeng-truncation", Form::Series, 100),
        ("am-2018-truncation", Form::Series, 100),
        ("cor-2-5-first", Form::Enumerative, 18),
        ("ineq-xyz", Form::Inequality, 60),
    ];
    let mut g = c.benchmark_group("verify");
    g.sample_size(20);
    for (id, form, extent) in jobs {
        let job = Job::new(id, form, k2, extent).unwrap();
        g.bench_function(id, |bench| bench.iter(|| verify(black_box(&job), &e).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, series, enumeration, verification);
criterion_main!(benches);
