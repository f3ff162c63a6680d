use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hyperflex_bench::sample_members;
use hyperflex_core::bitangents::bitangent_resultant;
use hyperflex_core::e6::weyl_group;
use hyperflex_core::family::{discriminant, is_smooth, point_count};
use hyperflex_core::padic::{formal_log, rho_log_image};
use hyperflex_core::{FamilyPoint, PrimeField};

fn algebra(c: &mut Criterion) {
    let curve = FamilyPoint::reference_curve();
    c.bench_function("bitangent_resultant", |b| b.iter(|| bitangent_resultant(black_box(&curve)).unwrap()));
    c.bench_function("discriminant", |b| b.iter(|| discriminant(black_box(&curve)).unwrap()));
}

fn finite_fields(c: &mut Criterion) {
    let f7 = PrimeField::new(7);
    let members: Vec<_> = sample_members(64).iter().map(|b| b.reduce(&f7)).collect();
    c.bench_function("is_smooth_mod_7_x64", |b| {
        b.iter(|| members.iter().filter(|m| is_smooth(&f7, m)).count())
    });
    c.bench_function("point_count_mod_7_x64", |b| {
        b.iter(|| members.iter().map(|m| point_count(&f7, m)).sum::<u64>())
    });
}

fn padic(c: &mut Criterion) {
    let curve = FamilyPoint::reference_curve();
    c.bench_function("formal_log_order_40", |b| b.iter(|| formal_log(black_box(&curve), 2, 40).unwrap()));
    c.bench_function("rho_log_image", |b| b.iter(|| rho_log_image(black_box(&curve), 2, 13).unwrap()));
}

fn lattice(c: &mut Criterion) {
    let mut g = c.benchmark_group("e6");
    g.sample_size(10);
    g.bench_function("weyl_group", |b| b.iter(weyl_group));
    g.finish();
}

criterion_group!(benches, algebra, finite_fields, padic, lattice);
criterion_main!(benches);
