use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hamming_competition::{
    build_d_box, build_d_h2q, canonical_family, competition_number_bruteforce, hamming_graph,
    maximal_cliques, scan_four_subsets, theta_e_bruteforce, verify_realization, box_graph,
};

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for q in [4u32, 8, 16] {
        group.bench_with_input(BenchmarkId::new("h2q", q), &q, |b, &q| {
            b.iter(|| build_d_h2q(black_box(q)).unwrap())
        });
    }
    for dims in [[3u32, 3, 3], [4, 5, 6], [6, 6, 6]] {
        let name = format!("{}x{}x{}", dims[0], dims[1], dims[2]);
        group.bench_function(BenchmarkId::new("box", &name), |b| {
            b.iter(|| build_d_box(black_box(&dims)).unwrap())
        });
        let r = build_d_box(&dims).unwrap();
        let g = box_graph(&dims).unwrap();
        group.bench_function(BenchmarkId::new("verify_box", &name), |b| {
            b.iter(|| verify_realization(r.digraph(), &g, 6).unwrap())
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let h32 = hamming_graph(3, 2).unwrap();
    let h23 = hamming_graph(2, 3).unwrap();
    group.bench_function("k(H(3,2))", |b| {
        b.iter(|| competition_number_bruteforce(black_box(&h32), None).unwrap())
    });
    group.bench_function("k(H(2,3))", |b| {
        b.iter(|| competition_number_bruteforce(black_box(&h23), None).unwrap())
    });
    group.bench_function("theta_e(H(2,3))", |b| b.iter(|| theta_e_bruteforce(black_box(&h23)).unwrap()));
    let h43 = hamming_graph(4, 2).unwrap();
    group.bench_function("maximal_cliques(H(4,2))", |b| b.iter(|| maximal_cliques(black_box(&h43)).unwrap()));
    let h33 = hamming_graph(3, 3).unwrap();
    let f = canonical_family(&h33).unwrap();
    group.bench_function("four_subsets(H(3,3))", |b| b.iter(|| scan_four_subsets(black_box(&h33), &f)));
    group.finish();
}

criterion_group!(benches, constructions, oracles);
criterion_main!(benches);
