use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use graycat::corpus::{gray_named, morphism_named};
use graycat::model::classify;
use graycat::nerve::{kan_check_nerve, nerve};
use graycat::path_object::path_object;
use graycat::replacement::comonad_check;
use graycat::simplicial::DEFAULT_BUDGET;
use graycat::validate_gray_category;

fn validation(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate");
    for name in ["B(Z/4)", "S2(Z/3)", "C*(noncomm)", "LD(C(iso))"] {
        let g = gray_named(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| validate_gray_category(black_box(g)).unwrap()));
    }
    group.finish();

    let pb = path_object(&gray_named("B(Z/3)")).unwrap().pb;
    c.bench_function("validate/path object of B(Z/3)", |b| b.iter(|| validate_gray_category(black_box(&pb)).unwrap()));

    let m = morphism_named("D[B(Z/2)]");
    c.bench_function("classify/D[B(Z/2)]", |b| b.iter(|| classify(black_box(m.as_morphism()))));

    let n = nerve(&gray_named("S2(Z/3)")).unwrap();
    c.bench_function("kan_check_nerve/S2(Z/3)", |b| b.iter(|| kan_check_nerve(black_box(&n), 4, DEFAULT_BUDGET).unwrap()));

    let t = gray_named("B(Z/2)");
    c.bench_function("comonad_check/B(Z/2) at 2", |b| b.iter(|| comonad_check(black_box(&t), 2)));
}

criterion_group!(benches, validation);
criterion_main!(benches);
