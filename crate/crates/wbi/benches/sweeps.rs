use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wbi::classes::equiv_class;
use wbi::diagram::enumerate_st;
use wbi::families::{enumerate_family, family_class_bfs, Family, FamilyModule};
use wbi::verify::{run_suite, Suite};
use wbi::{Caps, Composition, Mode};

const MODES: [(&str, Mode); 2] = [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)];

fn q_class(c: &mut Criterion) {
    let caps = Caps::default();
    let a: Composition = "(3,2,3,1)".parse().unwrap();
    let iv = wbi::families::family_interval(FamilyModule::Q, &a).unwrap();
    let mut g = c.benchmark_group("equiv_class_q3231");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| equiv_class(black_box(&iv), &caps, mode).unwrap().len()));
    }
    g.finish();
}

fn tableaux(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("tableaux");
    g.sample_size(10);
    for alpha in ["(3,3,3)", "(2,3,2,3)"] {
        let a: Composition = alpha.parse().unwrap();
        let d = a.tcd();
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(format!("st/{name}"), alpha), &d, |b, d| {
                b.iter(|| enumerate_st(black_box(d), &caps, mode).unwrap().len())
            });
            g.bench_with_input(BenchmarkId::new(format!("sit/{name}"), alpha), &a, |b, a| {
                b.iter(|| enumerate_family(Family::Sit, black_box(a), &caps, mode).unwrap().len())
            });
        }
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (suite, nmax) in [(Suite::Poset, 5), (Suite::Class, 4), (Suite::Family, 6)] {
        for (name, mode) in MODES {
            g.bench_function(BenchmarkId::new(name, format!("{}/{nmax}", suite.name())), |b| {
                b.iter(|| run_suite(suite, nmax, &caps, mode).unwrap().checks)
            });
        }
    }
    g.finish();
}

fn family_bfs(c: &mut Criterion) {
    let caps = Caps::default();
    let a: Composition = "(2,2,2,2)".parse().unwrap();
    let mut g = c.benchmark_group("family_bfs_x2222");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| family_class_bfs(FamilyModule::X, black_box(&a), &caps, mode).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, q_class, tableaux, sweeps, family_bfs);
criterion_main!(benches);
