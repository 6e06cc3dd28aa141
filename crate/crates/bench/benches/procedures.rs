use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use powercolor::walks::{augment, count_nice, enumerate_walks};
use powercolor::{
    exact_chromatic, generators, run_improved_procedure, run_main_procedure, OracleLimits,
    PartialColoring,
};
use powercolor_bench::{oracle_inputs, path_procedure_inputs};

fn walks(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_walks");
    let g = generators::prism(30).unwrap();
    for k in [4, 8, 12] {
        let ag = augment(&g, k, 3).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &ag, |b, ag| {
            b.iter(|| enumerate_walks(ag, black_box(0), k, true).unwrap().len())
        });
    }
    group.finish();

    let ag = augment(&generators::dary_tree(3, 4).unwrap(), 6, 3).unwrap();
    let order = enumerate_walks(&ag, 0, 6, false).unwrap();
    let mut coloring = PartialColoring::new(ag.vertex_count(), 8);
    for v in (0..ag.vertex_count()).step_by(3) {
        coloring.set(v, v % 8);
    }
    c.bench_function("count_nice/tree_k6", |b| {
        b.iter(|| count_nice(&order, &coloring, ag.original_count()).count)
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_chromatic");
    let limits = OracleLimits::default();
    for (name, g) in oracle_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| exact_chromatic(g, &limits).unwrap())
        });
    }
    group.finish();
}

fn procedures(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_main_procedure");
    group.sample_size(10);
    for k in [3, 4] {
        for (name, g) in path_procedure_inputs(k) {
            group.bench_with_input(BenchmarkId::new(format!("k{k}"), name), &g, |b, g| {
                b.iter(|| run_main_procedure(g, k).unwrap().1.colors_used)
            });
        }
    }
    group.finish();

    let prism = generators::prism(44).unwrap();
    let mut group = c.benchmark_group("run_improved_procedure");
    group.sample_size(10);
    group.bench_function("prism44_k17_s1", |b| {
        b.iter(|| run_improved_procedure(&prism, 17, 1).unwrap().1.colors_used)
    });
    group.finish();
}

criterion_group!(benches, walks, oracle, procedures);
criterion_main!(benches);
