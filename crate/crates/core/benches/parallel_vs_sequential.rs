use std::hint::black_box;

use cranklab::chains::enumerate_independent_via_partitions;
use cranklab::hereditary::{partition_representability, HeredCollection};
use cranklab::lattice::families;
use cranklab::{rank, Caps, SbMatrix, SbScalar};
use criterion::{criterion_group, criterion_main, Criterion};

fn workloads(c: &mut Criterion, name: &str, pool: Option<&rayon::ThreadPool>) {
    let caps = Caps::default();
    let run = |f: &mut (dyn FnMut() + Send)| match pool {
        Some(p) => p.install(f),
        None => f(),
    };
    let boolean = families::boolean_lattice(4);
    let lambda = families::lambda(3);
    let dense = SbMatrix::from_fn(12, 12, |i, j| match (i * 7 + j * 3) % 5 {
        0 => SbScalar::Zero,
        4 => SbScalar::Ghost,
        _ => SbScalar::One,
    });
    let ground: Vec<String> = (0..6).map(|i| i.to_string()).collect();
    let uniform = HeredCollection::new(
        ground,
        (0u64..64).filter(|m| m.count_ones() <= 3).collect(),
        &caps,
    )
    .unwrap();

    let mut group = c.benchmark_group(name);
    group.sample_size(20);
    group.bench_function("c_independent_sets/boolean4", |b| {
        b.iter(|| {
            run(&mut || {
                black_box(boolean.c_independent_sets(&caps).unwrap());
            })
        })
    });
    group.bench_function("cross_sections/lambda3", |b| {
        b.iter(|| {
            run(&mut || {
                black_box(enumerate_independent_via_partitions(&lambda, &caps).unwrap());
            })
        })
    });
    group.bench_function("rank/12x12", |b| {
        b.iter(|| {
            run(&mut || {
                black_box(rank::rank(&dense).unwrap());
            })
        })
    });
    group.bench_function("representability/uniform3of6", |b| {
        b.iter(|| {
            run(&mut || {
                black_box(partition_representability(&uniform, &caps).unwrap());
            })
        })
    });
    group.finish();
}

fn parallel(c: &mut Criterion) {
    workloads(c, "parallel", None);
}

fn sequential(c: &mut Criterion) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    workloads(c, "one_thread", Some(&pool));
}

criterion_group!(benches, parallel, sequential);
criterion_main!(benches);
