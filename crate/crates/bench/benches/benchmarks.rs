use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rookcalc_core::identities::{check_spivey_general_cd, run_sweep, SweepSpec};
use rookcalc_core::laurent::{q_binomial, LaurentPolynomial};
use rookcalc_core::rook::{Board, Rule};
use rookcalc_core::stirling::{CdParams, StirlingTable};

fn laurent_mul(c: &mut Criterion) {
    let a = q_binomial(12, 6, 1);
    let b = q_binomial(14, 7, 2);
    c.bench_function("laurent_mul_binomials", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
}

fn table_fill(c: &mut Criterion) {
    c.bench_function("stirling_table_fill_n16_s2", |bench| {
        bench.iter(|| {
            let mut table = StirlingTable::new(CdParams::standard(2));
            black_box(table.value(16, 8))
        })
    });
}

fn rook_enumeration(c: &mut Criterion) {
    let board = Board::staircase(7);
    c.bench_function("rook_sum_staircase7_full", |bench| {
        bench.iter(|| {
            let mut acc = LaurentPolynomial::zero();
            for k in 0..=7usize {
                acc += &board.rook_sum(k, Rule::SameRow, black_box(2));
            }
            acc
        })
    });
}

fn identity_checks(c: &mut Criterion) {
    c.bench_function("check_spivey_general_cd_3_3", |bench| {
        bench.iter(|| check_spivey_general_cd(3, 3, 3, black_box(2), 2, -1))
    });
    let spec = SweepSpec {
        n_max: 2,
        m_max: 2,
        nm_max: 4,
        s: (0, 2),
        ..SweepSpec::default()
    };
    c.bench_function("sweep_separator_split_small", |bench| {
        bench.iter(|| run_sweep("separator_split", black_box(&spec)).unwrap())
    });
}

criterion_group!(
    benches,
    laurent_mul,
    table_fill,
    rook_enumeration,
    identity_checks
);
criterion_main!(benches);
