//! Batch kernels evaluated sequentially and on the rayon pool.
//!
//! Without the `parallel` feature the "parallel" variants fall back to
//! sequential iteration, so both lines should coincide.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superbv::bvcalc::DarbouxChart;
use superbv::parallel::*;
use superbv::random::{random_poly, stream_n};
use superbv::superlinalg::{berezinian, odd_constant_universe, random_even_matrix, SuperDimension, SuperMatrix};
use superbv::Poly;

fn matrices(n: usize) -> Vec<(SuperMatrix, SuperMatrix)> {
    let u = odd_constant_universe(6);
    (0..n)
        .map(|i| {
            let mut rng = stream_n(1, "bench-ber", i);
            let d = SuperDimension::new(3, 2);
            (random_even_matrix(&u, &mut rng, d), random_even_matrix(&u, &mut rng, d))
        })
        .collect()
}

fn ber_mult(p: &(SuperMatrix, SuperMatrix)) -> bool {
    let ab = p.0.mul(&p.1).unwrap();
    let r = &berezinian(&ab).unwrap() - &(&berezinian(&p.0).unwrap() * &berezinian(&p.1).unwrap());
    r.is_zero()
}

fn berezinian_batch(c: &mut Criterion) {
    let mut g = c.benchmark_group("ber-mult-batch");
    g.sample_size(10);
    for n in [8usize, 32] {
        let input = matrices(n);
        g.bench_with_input(BenchmarkId::new("sequential", n), &input, |b, m| b.iter(|| black_box(m.iter().all(ber_mult))));
        g.bench_with_input(BenchmarkId::new("parallel", n), &input, |b, m| {
            b.iter(|| black_box(m.par_iter().map(ber_mult).collect::<Vec<_>>().into_iter().all(|x| x)))
        });
    }
    g.finish();
}

fn triples(c: &DarbouxChart, n: usize) -> Vec<[Poly; 3]> {
    let mut gens: Vec<u16> = c.pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
    gens.push(c.universe().hbar().unwrap());
    (0..n)
        .map(|i| {
            let mut rng = stream_n(2, "bench-bv", i);
            [0, 1, 2].map(|_| random_poly(c.universe(), &mut rng, &gens, 4, 6, Some(0)))
        })
        .collect()
}

fn jacobi(c: &DarbouxChart, [f, g, h]: &[Poly; 3]) -> bool {
    let ab = |a: &Poly, b: &Poly| c.antibracket(a, b);
    // even f, g: the sign (-1)^{(|f|+1)(|g|+1)} is -1
    (&(&ab(f, &ab(g, h)) - &ab(&ab(f, g), h)) + &ab(g, &ab(f, h))).is_zero()
}

fn jacobi_batch(c: &mut Criterion) {
    let chart = DarbouxChart::standard(&[0, 0, 1], &[]);
    let mut g = c.benchmark_group("jacobi-batch");
    g.sample_size(10);
    let input = triples(&chart, 64);
    g.bench_function("sequential", |b| b.iter(|| black_box(input.iter().all(|t| jacobi(&chart, t)))));
    g.bench_function("parallel", |b| b.iter(|| black_box(input.par_iter().map(|t| jacobi(&chart, t)).collect::<Vec<_>>())));
    g.finish();
}

criterion_group!(benches, berezinian_batch, jacobi_batch);
criterion_main!(benches);
