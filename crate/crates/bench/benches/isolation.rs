use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use expalg_core::rug::Rational;
use expalg_core::{
    induce, isolate_roots, BasisSymbol, ExpSum, ExponentVector, GeneratorSet, IsolationConfig,
    PolynomialNC,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sum(rng: &mut ChaCha8Rng, terms: usize) -> ExpSum {
    let s2 = BasisSymbol::sqrt(2).unwrap();
    loop {
        let f = ExpSum::normalize((0..terms).map(|_| {
            let coeff = Rational::from((rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)));
            let exp = ExponentVector::from_coords([
                (
                    BasisSymbol::one(),
                    Rational::from((rng.gen_range(-6i64..=6), rng.gen_range(1i64..=3))),
                ),
                (s2.clone(), Rational::from(rng.gen_range(-1i64..=1))),
            ]);
            (coeff, exp)
        }));
        if f.rank() == terms {
            return f;
        }
    }
}

fn bench_isolation(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = IsolationConfig::default();
    let mut group = c.benchmark_group("isolate_roots");
    for rank in [2, 3, 5, 8] {
        let sums: Vec<ExpSum> = (0..8).map(|_| random_sum(&mut rng, rank)).collect();
        group.bench_with_input(BenchmarkId::from_parameter(rank), &sums, |b, sums| {
            b.iter(|| {
                for f in sums {
                    black_box(isolate_roots(f, &cfg).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_normalize(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let raw: Vec<(Rational, ExponentVector)> = (0..256)
        .map(|_| {
            (
                Rational::from((rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))),
                ExponentVector::rational(rng.gen_range(-20i64..=20)),
            )
        })
        .collect();
    c.bench_function("normalize/256", |b| {
        b.iter(|| black_box(ExpSum::normalize(raw.clone())))
    });
}

fn bench_induce(c: &mut Criterion) {
    let gens = GeneratorSet::new(vec![
        ExponentVector::rational(1),
        ExponentVector::single(BasisSymbol::sqrt(2).unwrap(), 1),
        ExponentVector::single(BasisSymbol::sqrt(3).unwrap(), 1),
    ])
    .unwrap();
    let mut group = c.benchmark_group("induce");
    for degree in [2u32, 4, 6] {
        let mut terms = Vec::new();
        for a in 0..=degree {
            for b in 0..=degree - a {
                for c in 0..=degree - a - b {
                    if a + b + c > 0 {
                        terms.push((Rational::from((a as i64 + 1, b as i64 + 1)), vec![a, b, c]));
                    }
                }
            }
        }
        let poly = PolynomialNC::new(3, terms).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(degree), &poly, |b, poly| {
            b.iter(|| black_box(induce(poly, &gens).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_isolation, bench_normalize, bench_induce);
criterion_main!(benches);
