//! Compares the rayon-backed check runner against a plain sequential loop
//! on a representative verification workload: applying one-step
//! equivalences to every projective and searching for isomorphisms.

use criterion::{criterion_group, criterion_main, Criterion};
use trpic_core::complex::Complex;
use trpic_core::homotopy::find_iso;
use trpic_core::nakayama::{Nakayama, NakayamaSpec};
use trpic_core::par;
use trpic_core::tilting::{apply_word, Word};
use trpic_core::FieldSpec;

fn workload(p: usize) -> bool {
    let alg = NakayamaSpec::new(3, 2, 1)
        .expect("coprime")
        .algebra(FieldSpec::Rational);
    let w1 = Word::parse("H0 H1 H0", FieldSpec::Rational).unwrap();
    let w2 = Word::parse("H1 H0 H1", FieldSpec::Rational).unwrap();
    let stalk = Complex::<Nakayama>::stalk(p, 0);
    let lhs = apply_word(&alg, 3, &w1, &stalk).unwrap();
    let rhs = apply_word(&alg, 3, &w2, &stalk).unwrap();
    find_iso(&alg, &lhs, &rhs, 11, 16).is_iso()
}

fn bench_runners(c: &mut Criterion) {
    let jobs: Vec<usize> = (0..6).collect();
    let mut group = c.benchmark_group("braid-checks");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let out = par::map_collect(jobs.clone(), workload);
            assert!(out.iter().all(|&x| x));
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let out: Vec<bool> = jobs.iter().map(|&p| workload(p)).collect();
            assert!(out.iter().all(|&x| x));
        })
    });
    group.finish();
}

criterion_group!(benches, bench_runners);
criterion_main!(benches);
