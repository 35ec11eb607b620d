use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gkm::arrangements::{gen_klm, KlmSpec};
use gkm::cohomology_engine::{kernel_forgetful_check, verify_iso, VerifyOptions};
use gkm::hyperplane_geometry::Geometry;
use gkm::par::Exec;
use gkm::shelling_basis::{structure_constants, ShellingBasis, DEFAULT_SEARCH_BUDGET};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_verify_iso(c: &mut Criterion) {
    let g = gen_klm(KlmSpec::new(2, 2, 2).unwrap()).unwrap();
    let mut group = c.benchmark_group("verify_iso_klm222_d4");
    group.sample_size(10);
    for (name, exec) in MODES {
        for forgetful in [true, false] {
            let id = BenchmarkId::new(name, if forgetful { "forgetful" } else { "full" });
            let options = VerifyOptions { exec, ..Default::default() };
            group.bench_function(id, |b| b.iter(|| verify_iso(black_box(&g), 4, forgetful, options).unwrap()));
        }
    }
    group.finish();
}

fn bench_structure_constants(c: &mut Criterion) {
    let g = gen_klm(KlmSpec::new(3, 3, 3).unwrap()).unwrap();
    let sb = ShellingBasis::build(&g, DEFAULT_SEARCH_BUDGET).unwrap();
    let mut group = c.benchmark_group("structure_constants_klm333");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| structure_constants(black_box(&sb), false, exec).unwrap()));
    }
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let g = gen_klm(KlmSpec::new(4, 4, 4).unwrap()).unwrap();
    let mut group = c.benchmark_group("geometry_klm444");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| Geometry::build_with(black_box(&g), exec).unwrap()));
    }
    group.finish();
}

fn bench_kernel(c: &mut Criterion) {
    let g = gen_klm(KlmSpec::new(2, 1, 2).unwrap()).unwrap();
    let mut group = c.benchmark_group("kernel_check_klm212_d3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| kernel_forgetful_check(black_box(&g), 3, exec)));
    }
    group.finish();
}

criterion_group!(benches, bench_verify_iso, bench_structure_constants, bench_geometry, bench_kernel);
criterion_main!(benches);
