use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gk_core::catalog::Catalog;
use gk_core::families::Sporadic;
use gk_core::recogniser::{recognise_in, Strategy};

fn replay(c: &mut Criterion) {
    let catalog = Catalog::builtin();
    let mut group = c.benchmark_group("recognise");
    group.sample_size(10);
    for target in [Sporadic::Th, Sporadic::Fi23, Sporadic::B] {
        for (label, strategy) in [
            ("parallel", Strategy::Parallel),
            ("sequential", Strategy::Sequential),
        ] {
            group.bench_with_input(BenchmarkId::new(label, target), &strategy, |b, &s| {
                b.iter(|| recognise_in(catalog, target, s).expect("replay succeeds"))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, replay);
criterion_main!(benches);
