use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use groupomega::group_algebra::ideal_power_dims;
use groupomega::jennings::{jennings_ideal_dims, p_degrees};
use groupomega::matchings::{cyclic_border, pgroup_chain_border};
use groupomega::slice_bounds::ideal_bound;
use groupomega::tensor_rank::{flat_rank_exact, mult_tensor, slice_rank_exact};
use groupomega::tpp_omega::{char_degrees, omega_solve, verify_tpp};
use groupomega::young::{hexagon_shape, subgroup_order_ratio, triangle_shape, triangle_tpp_instance};
use groupomega::{Budget, Group, GroupSpec, PrimeField};
use num_bigint::BigUint;

fn rank_oracles(c: &mut Criterion) {
    let f2 = PrimeField::new(2).unwrap();
    let mut g = c.benchmark_group("rank");
    for m in [2, 3, 4] {
        let t = mult_tensor(&Group::cyclic(m).unwrap(), f2);
        g.bench_with_input(BenchmarkId::new("slice_rank_exact/Z", m), &t, |b, t| {
            b.iter(|| slice_rank_exact(black_box(t)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("flat_rank_exact/Z", m), &t, |b, t| {
            b.iter(|| flat_rank_exact(black_box(t)).unwrap())
        });
    }
    g.finish();
}

fn group_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideal");
    for (spec, p) in [("ut:3,3", 3u64), ("ut:4,2", 2), ("abelian:2,2,2,2,2,2", 2)] {
        let grp = GroupSpec::parse(spec).unwrap().build().unwrap();
        let f = PrimeField::new(p).unwrap();
        g.bench_function(BenchmarkId::new("ideal_power_dims", spec), |b| b.iter(|| ideal_power_dims(&grp, f)));
        g.bench_function(BenchmarkId::new("jennings_ideal_dims", spec), |b| {
            b.iter(|| jennings_ideal_dims(&p_degrees(&grp, p).unwrap()))
        });
        g.bench_function(BenchmarkId::new("ideal_bound", spec), |b| b.iter(|| ideal_bound(&grp, p).unwrap()));
    }
    g.finish();
}

fn matchings(c: &mut Criterion) {
    let mut g = c.benchmark_group("matching");
    g.bench_function("cyclic_border_verify/200", |b| {
        let z = Group::cyclic(200).unwrap();
        let m = cyclic_border(200).unwrap();
        b.iter(|| m.verify(&z, Budget::default()).unwrap())
    });
    g.bench_function("pgroup_chain_border/ut:3,3", |b| {
        let grp = Group::unitriangular(3, 3).unwrap();
        b.iter(|| pgroup_chain_border(&grp, 3, Budget::default()).unwrap())
    });
    g.finish();
}

fn symmetric(c: &mut Criterion) {
    let mut g = c.benchmark_group("symmetric");
    g.bench_function("triangle_tpp/3", |b| {
        let (grp, inst) = triangle_tpp_instance(3).unwrap();
        b.iter(|| verify_tpp(&grp, &inst, Budget::default()).unwrap())
    });
    g.bench_function("ratio/hexagon6_triangle13", |b| {
        let (h, t) = (hexagon_shape(6).unwrap(), triangle_shape(13).unwrap());
        b.iter(|| subgroup_order_ratio(&h, &t))
    });
    g.bench_function("omega_solve/S8", |b| {
        let d = char_degrees(&GroupSpec::Symmetric(8)).unwrap();
        let products = vec![BigUint::from(40320u32 * 4)];
        b.iter(|| omega_solve(&products, &d).unwrap())
    });
    g.finish();
}

criterion_group!(benches, rank_oracles, group_algebra, matchings, symmetric);
criterion_main!(benches);
