#![allow(dead_code)]

use skewcoh::{CyclicGroup, FieldSpec, Matrix};

pub fn group(f: FieldSpec, rows: &[&[i64]]) -> CyclicGroup {
    CyclicGroup::from_generator(f, Matrix::from_i64(f, rows)).expect("finite order")
}

pub fn transvection(p: u64) -> CyclicGroup {
    group(FieldSpec::Prime(p), &[&[1, 1], &[0, 1]])
}

pub fn gl3_f3() -> CyclicGroup {
    group(FieldSpec::Prime(3), &[&[1, 1, 0], &[0, 1, 0], &[0, 0, -1]])
}

pub fn gl4_f3() -> CyclicGroup {
    group(
        FieldSpec::Prime(3),
        &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]],
    )
}

/// The fixed regression suite.
pub fn suite() -> Vec<(&'static str, CyclicGroup)> {
    let f3 = FieldSpec::Prime(3);
    let f5 = FieldSpec::Prime(5);
    let q = FieldSpec::Rational;
    vec![
        ("transvection F_3", transvection(3)),
        ("transvection F_5", transvection(5)),
        ("transvection F_7", transvection(7)),
        ("diag(1,-1) F_5", group(f5, &[&[1, 0], &[0, -1]])),
        ("diag(2,3) F_5", group(f5, &[&[2, 0], &[0, 3]])),
        ("rotation F_5", group(f5, &[&[0, -1], &[1, 0]])),
        ("rotation Q", group(q, &[&[0, -1], &[1, 0]])),
        ("GL3 F_3 example", gl3_f3()),
        ("GL4 F_3 example", gl4_f3()),
        ("-1 on F_5^3", group(f5, &[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]])),
        (
            "order 8 on F_3^4",
            group(f3, &[&[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]),
        ),
        ("trivial Q^1", group(q, &[&[1]])),
        ("trivial Q^2", group(q, &[&[1, 0], &[0, 1]])),
        ("trivial Q^3", group(q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
    ]
}
