use criterion::{criterion_group, criterion_main, Criterion};
use selfsim_core::families::{eval_branch, FamilyId, FamilyParams, Point, SolutionBranch};
use selfsim_core::hyperfun::{
    clausen_3f2_integral, eval_kdf, eval_pfq, eval_psi2, pochhammer, EvalOptions, KdfSpec,
    PfqSpec, Psi2Spec,
};
use selfsim_core::verify::{apply_operator, FdScheme};
use std::hint::black_box;

fn bench_series(c: &mut Criterion) {
    let opts = EvalOptions::default();

    c.bench_function("pochhammer_50", |b| {
        b.iter(|| pochhammer(black_box(0.7), black_box(50)))
    });

    let f11 = PfqSpec::f11(0.5, 0.8).unwrap();
    c.bench_function("1f1_at_minus_five", |b| {
        b.iter(|| eval_pfq(&f11, black_box(-5.0), &opts).unwrap())
    });

    let f32s = PfqSpec::f32([1.0, 4.0 / 3.0, 5.0 / 3.0], [1.4, 1.8]).unwrap();
    c.bench_function("3f2_near_disk_edge", |b| {
        b.iter(|| eval_pfq(&f32s, black_box(-0.9), &opts).unwrap())
    });

    let psi2 = Psi2Spec::new(0.5, 0.75, 1.25).unwrap();
    c.bench_function("psi2_shells", |b| {
        b.iter(|| eval_psi2(&psi2, black_box(-1.2), black_box(-0.8), &opts).unwrap())
    });

    let kdf = KdfSpec::new(
        vec![1.0],
        vec![],
        vec![],
        vec![],
        vec![0.75, 0.5],
        vec![0.75, 0.5],
    )
    .unwrap();
    c.bench_function("kdf_shells", |b| {
        b.iter(|| eval_kdf(&kdf, black_box(-1.2), black_box(-0.8), &opts).unwrap())
    });

    c.bench_function("3f2_integral_64_nodes", |b| {
        b.iter(|| {
            clausen_3f2_integral(1.0, 4.0 / 3.0, 5.0 / 3.0, 1.4, 1.8, black_box(-0.5), 64)
                .unwrap()
        })
    });
}

fn bench_branches(c: &mut Criterion) {
    let opts = EvalOptions::default();
    let params = FamilyParams::default();

    let t5 = SolutionBranch::new(FamilyId::T5, 5).unwrap();
    let point = Point::xyt(1.2, 0.8, 0.9);
    c.bench_function("t5_branch5_eval", |b| {
        b.iter(|| eval_branch(&t5, &params, black_box(&point), &opts).unwrap())
    });

    let f6 = SolutionBranch::new(FamilyId::F6, 1).unwrap();
    let scheme = FdScheme::default_for(FamilyId::F6);
    let field = selfsim_core::families::branch_field(&f6, &params, &opts);
    let p = Point::xt(1.2, 0.9);
    c.bench_function("f6_operator_point", |b| {
        b.iter(|| apply_operator(FamilyId::F6, &params, &field, black_box(&p), &scheme).unwrap())
    });
}

criterion_group!(benches, bench_series, bench_branches);
criterion_main!(benches);
