use criterion::{criterion_group, criterion_main, Criterion};
use gracelab::{enumerate_labelings, exists_labeling, Family, SearchConfig};

fn decision(c: &mut Criterion) {
    let cases = [
        (Family::Cycle(6), 3),
        (Family::Cycle(8), 4),
        (Family::Path(11), 5),
    ];
    for (family, k) in cases {
        let g = family.build().unwrap();
        let cfg = SearchConfig::new(k).with_workers(1);
        c.bench_function(&format!("exists {family} k={k}"), |b| {
            b.iter(|| exists_labeling(&g, &cfg).unwrap())
        });
    }
}

fn enumeration(c: &mut Criterion) {
    let g = Family::Cycle(5).build().unwrap();
    let cfg = SearchConfig::new(1).with_workers(1).enumerate(None);
    c.bench_function("enumerate C5 k=1", |b| {
        b.iter(|| enumerate_labelings(&g, &cfg).unwrap())
    });
}

criterion_group!(benches, decision, enumeration);
criterion_main!(benches);
