use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bitableau::ideals::{check_grobner_js, Arith, SweepOptions};
use bitableau::rees::check_kernel;
use bitableau::{Exec, Shape};

fn grobner(c: &mut Criterion) {
    let mut group = c.benchmark_group("grobner_check");
    group.sample_size(10);
    for (size, s) in [(3, "2,2,1"), (4, "3,2")] {
        let shape: Shape = s.parse().unwrap();
        for (name, exec, arith) in [
            ("parallel_rational", Exec::Parallel, Arith::Rational),
            ("sequential_rational", Exec::Sequential, Arith::Rational),
            ("parallel_modular", Exec::Parallel, Arith::Modular),
        ] {
            let opts = SweepOptions::for_shape(&shape).with_exec(exec).with_arith(arith);
            group.bench_with_input(BenchmarkId::new(name, format!("{size}x{size} {s}")), &opts, |b, o| {
                b.iter(|| check_grobner_js(size, size, &shape, o).unwrap())
            });
        }
    }
    group.finish();
}

fn kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel_check_4x4");
    group.sample_size(10);
    for (name, exec) in [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)] {
        group.bench_function(name, |b| b.iter(|| check_kernel(4, 4, 2, 2, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, grobner, kernel);
criterion_main!(benches);
