use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mcgrep_core::certify::garside_agreement;
use mcgrep_core::lk::LkGeneratorTable;
use mcgrep_core::sample::WordSampler;
use mcgrep_core::Parallelism;

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn lk_long_word(c: &mut Criterion) {
    let mut group = c.benchmark_group("lk_eval_long_word");
    for g in [5u32, 7] {
        let table = LkGeneratorTable::build(g).unwrap();
        let w = WordSampler::new(11, g).braid_word(400);
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, g), &w, |b, w| {
                b.iter(|| table.eval_with(w, mode).unwrap())
            });
        }
    }
    group.finish();
}

fn garside_sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("garside_agreement");
    group.sample_size(10);
    let table = LkGeneratorTable::build(4).unwrap();
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| garside_agreement(&table, 100, 20, 5, mode)));
    }
    group.finish();
}

criterion_group!(benches, lk_long_word, garside_sampling);
criterion_main!(benches);
