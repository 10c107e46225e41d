use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hookpoly::identities::{hook_poly_all_with, theorem1_all_k};
use hookpoly::immanant::{hook_immanant_all_with, immanant_bruteforce_with};
use hookpoly::{ExactMatrix, Execution, GraphSpec, HookLabel, MatrixKind};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn random_matrix(n: usize, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    ExactMatrix::from_rows(&rows).unwrap()
}

fn random_graph(directed: bool, n: usize, p: f64, seed: u64) -> GraphSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| if directed { u != v } else { u < v })
        .filter(|_| rng.gen_bool(p))
        .collect();
    GraphSpec::new(directed, n, edges).unwrap()
}

fn immanants(c: &mut Criterion) {
    let mut group = c.benchmark_group("hook_immanant_all");
    for n in [8, 12] {
        let m = random_matrix(n, n as u64);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| b.iter(|| hook_immanant_all_with(m, exec)));
        }
    }
    group.finish();

    let mut group = c.benchmark_group("immanant_bruteforce");
    group.sample_size(10);
    let m = random_matrix(8, 1);
    let label = HookLabel::for_k(3, 8);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| immanant_bruteforce_with(&m, label, exec).unwrap()));
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("hook_poly_all");
    group.sample_size(10);
    let g = random_graph(false, 10, 0.5, 7);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| hook_poly_all_with(&g, MatrixKind::L, exec).unwrap()));
    }
    group.finish();

    let mut group = c.benchmark_group("theorem1_all_k");
    group.sample_size(10);
    let g = random_graph(true, 6, 0.4, 11);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| theorem1_all_k(&g, MatrixKind::Q, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, immanants, polynomials);
criterion_main!(benches);
