use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use reslat::builders::{godel, lukasiewicz, ordinal_sum, rotate, Delta, RotationSpec};
use reslat::enumerate::{enumerate_rl_with, SearchConstraints, DEFAULT_CAP};
use reslat::par::Exec;
use reslat::term::{builtin, satisfies_with};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for size in [5, 6] {
        let cs = SearchConstraints::of_size(size);
        for (label, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(label, size), &cs, |b, cs| {
                b.iter(|| enumerate_rl_with(cs, exec, DEFAULT_CAP).unwrap().len())
            });
        }
    }
    g.finish();
}

fn satisfaction(c: &mut Criterion) {
    // a 14-element MTL chain; λ₃ and (G) have four variables each
    let base = ordinal_sum(&[lukasiewicz(3).unwrap(), godel(2)]).unwrap();
    let alg = rotate(&RotationSpec {
        base: &base,
        n: 4,
        delta: Delta::Identity,
    })
    .unwrap()
    .algebra;
    let statements = [
        ("lambda3", builtin("lambda", &[3]).unwrap()),
        ("G", builtin("G", &[]).unwrap()),
    ];
    let mut g = c.benchmark_group("satisfies");
    for (name, stmts) in &statements {
        for (label, exec) in MODES {
            g.bench_function(BenchmarkId::new(label, name), |b| {
                b.iter(|| {
                    stmts
                        .iter()
                        .all(|s| satisfies_with(&alg, s, exec).unwrap().holds)
                })
            });
        }
    }
    g.finish();
}

criterion_group!(benches, enumeration, satisfaction);
criterion_main!(benches);
