mod common;

use proptest::prelude::*;
use skewcoh::formula::{full_report, full_report_with, nonmodular_crosscheck};
use skewcoh::oracle::{assembled, oracle_report, oracle_report_with};
use skewcoh::{CyclicGroup, Execution, FieldSpec, Matrix};

use common::suite;

fn random_group(p: u64, n: usize, entries: &[i64]) -> Option<CyclicGroup> {
    let f = FieldSpec::Prime(p);
    let rows: Vec<Vec<_>> = entries.chunks(n).map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
    let m = Matrix::from_rows(f, n, rows).ok()?;
    if m.det().is_zero() {
        return None;
    }
    CyclicGroup::from_generator(f, m).ok()
}

fn generator() -> impl Strategy<Value = (u64, usize, Vec<i64>)> {
    (prop_oneof![Just(3u64), Just(5), Just(7)], 2usize..4)
        .prop_flat_map(|(p, n)| (Just(p), Just(n), prop::collection::vec(0i64..p as i64, n * n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_oracle_on_random_generators((p, n, e) in generator()) {
        if let Some(gr) = random_group(p, n, &e) {
            prop_assume!(gr.order() <= 60);
            let formula = full_report(&gr).unwrap();
            let oracle = oracle_report(&gr).unwrap();
            let lhs: Vec<usize> = formula.per_element.iter().map(|s| s.total).collect();
            let rhs: Vec<usize> = oracle.per_element.iter().map(|c| c.hh_dim).collect();
            prop_assert_eq!(lhs, rhs);
            let cross = nonmodular_crosscheck(&gr, &formula).unwrap();
            prop_assert!(!cross.coprime.is_fail() && !cross.split.is_fail());
        }
    }

    #[test]
    fn assembled_complex_matches_per_element((p, e) in (prop_oneof![Just(3u64), Just(5)], prop::collection::vec(0i64..5, 4))) {
        if let Some(gr) = random_group(p, 2, &e) {
            prop_assume!(gr.order() <= 12);
            let split = oracle_report(&gr).unwrap();
            let whole = assembled::dims(&gr);
            prop_assert_eq!(whole.z_dim, split.per_element.iter().map(|c| c.z_dim).sum::<usize>());
            prop_assert_eq!(whole.b_dim, split.per_element.iter().map(|c| c.b_dim).sum::<usize>());
        }
    }
}

#[test]
fn suite_totals() {
    let expected = [6, 10, 14];
    for ((name, gr), want) in suite().iter().zip(expected) {
        assert_eq!(full_report(gr).unwrap().total_dim, want, "{name}");
    }
}

#[test]
fn assembled_matches_on_suite() {
    for (name, gr) in suite() {
        if gr.order() * gr.dim() > 24 {
            continue;
        }
        let split = oracle_report(&gr).unwrap();
        let whole = assembled::dims(&gr);
        assert_eq!(whole.z_dim, split.per_element.iter().map(|c| c.z_dim).sum::<usize>(), "{name}");
        assert_eq!(whole.b_dim, split.per_element.iter().map(|c| c.b_dim).sum::<usize>(), "{name}");
    }
}

#[test]
fn execution_modes_agree() {
    for (_, gr) in suite() {
        assert_eq!(
            full_report_with(&gr, Execution::Sequential).unwrap(),
            full_report_with(&gr, Execution::Parallel).unwrap()
        );
        assert_eq!(
            oracle_report_with(&gr, Execution::Sequential).unwrap(),
            oracle_report_with(&gr, Execution::Parallel).unwrap()
        );
    }
}

#[test]
fn rational_rotation_has_no_split() {
    let q = FieldSpec::Rational;
    let gr = CyclicGroup::from_generator(q, Matrix::from_i64(q, &[&[0, -1], &[1, 0]])).unwrap();
    assert!(!gr.generator_splits());
    assert_eq!(full_report(&gr).unwrap().total_dim, oracle_report(&gr).unwrap().total_dim);
}
