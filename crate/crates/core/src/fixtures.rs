//! A small corpus of codes and curves used by tests, benchmarks and the CLI.

use crate::code::{AdditiveCode, ScalarAction, Side};
use crate::curves::PlaneCurve;
use crate::group::{make_group, EnumerationBound, FiniteAbelianGroup};

#[derive(Debug, Clone)]
pub struct CodeFixture {
    pub name: &'static str,
    pub code: AdditiveCode,
}

#[derive(Debug, Clone)]
pub struct CurveFixture {
    pub name: &'static str,
    pub curve: PlaneCurve,
}

fn build(moduli: &[u64], n: usize, gens: &[&[usize]]) -> AdditiveCode {
    let group = make_group(moduli).expect("fixture group");
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    AdditiveCode::from_generator_digits(&group, n, Side::Group, &gens, EnumerationBound::default())
        .expect("fixture code")
}

fn full(moduli: &[u64], n: usize) -> AdditiveCode {
    let group = make_group(moduli).expect("fixture group");
    AdditiveCode::full_space(&group, n, EnumerationBound::default()).expect("fixture code")
}

/// `(1, …, 1)` over `Z_m`.
fn repetition(m: u64, n: usize) -> AdditiveCode {
    build(&[m], n, &[&vec![1; n]])
}

/// Words of `Z_m^n` whose coordinates sum to zero.
fn sum_zero(m: u64, n: usize) -> AdditiveCode {
    let gens: Vec<Vec<usize>> = (0..n - 1)
        .map(|i| {
            let mut w = vec![0; n];
            w[i] = 1;
            w[i + 1] = (m - 1) as usize;
            w
        })
        .collect();
    let refs: Vec<&[usize]> = gens.iter().map(|g| g.as_slice()).collect();
    build(&[m], n, &refs)
}

pub fn hamming_7_4() -> AdditiveCode {
    build(
        &[2],
        7,
        &[
            &[1, 0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 1],
        ],
    )
}

pub fn simplex_7_3() -> AdditiveCode {
    build(
        &[2],
        7,
        &[
            &[1, 1, 0, 1, 1, 0, 0],
            &[1, 0, 1, 1, 0, 1, 0],
            &[0, 1, 1, 1, 0, 0, 1],
        ],
    )
}

/// `F_4 = {0, 1, ω, ω²}` acting on `Z_2 × Z_2`, where residues `(a, b)`
/// stand for `a + bω`.
pub fn f4_scalar_action(group: &FiniteAbelianGroup) -> ScalarAction {
    let omega = vec![0, 3, 1, 2];
    let omega2 = vec![0, 2, 3, 1];
    ScalarAction::new(group, vec![vec![0, 1, 2, 3], omega, omega2]).expect("F_4 action")
}

/// The `F_4`-linear `[4,2,3]` code spanned by `(1,0,1,1)` and `(0,1,1,ω)`.
pub fn f4_mds_4_2() -> AdditiveCode {
    // 1 ↦ 2, ω ↦ 1, ω² ↦ 3
    build(
        &[2, 2],
        4,
        &[&[2, 0, 2, 2], &[1, 0, 1, 1], &[0, 2, 2, 1], &[0, 1, 1, 3]],
    )
}

/// Every code fixture, in a fixed order.
pub fn code_fixtures() -> Vec<CodeFixture> {
    let f = |name, code| CodeFixture { name, code };
    vec![
        f("z2-full-3", full(&[2], 3)),
        f("z2-rep-3", repetition(2, 3)),
        f("z2-rep-5", repetition(2, 5)),
        f("z2-even-4", sum_zero(2, 4)),
        f("z2-even-5", sum_zero(2, 5)),
        f("z2-hamming-7-4", hamming_7_4()),
        f("z2-simplex-7-3", simplex_7_3()),
        f(
            "z2-ext-hamming-8-4",
            build(
                &[2],
                8,
                &[
                    &[1, 0, 0, 0, 1, 1, 0, 1],
                    &[0, 1, 0, 0, 1, 0, 1, 1],
                    &[0, 0, 1, 0, 0, 1, 1, 1],
                    &[0, 0, 0, 1, 1, 1, 1, 0],
                ],
            ),
        ),
        f(
            "z2-short-hamming-6-3",
            build(&[2], 6, &[&[1, 0, 0, 1, 1, 0], &[0, 1, 0, 1, 0, 1], &[0, 0, 1, 0, 1, 1]]),
        ),
        f("z2-split-6-2", build(&[2], 6, &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1]])),
        f("z2-5-2", build(&[2], 5, &[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 1]])),
        f("z2-8-2", build(&[2], 8, &[&[1, 1, 1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1, 1, 1]])),
        f("z2-pairs-4-2", build(&[2], 4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])),
        f("z3-full-2", full(&[3], 2)),
        f("z3-rep-3", repetition(3, 3)),
        f("z3-rep-4", repetition(3, 4)),
        f("z3-sum-zero-3", sum_zero(3, 3)),
        f("z3-sum-zero-4", sum_zero(3, 4)),
        f("z3-tetracode", build(&[3], 4, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])),
        f("z3-split-6-2", build(&[3], 6, &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1]])),
        f("z3-5-2", build(&[3], 5, &[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 2]])),
        f("z5-full-2", full(&[5], 2)),
        f("z5-rep-3", repetition(5, 3)),
        f("z5-sum-zero-3", sum_zero(5, 3)),
        f("z5-sum-zero-4", sum_zero(5, 4)),
        f("z5-rs-4-2", build(&[5], 4, &[&[1, 1, 1, 1], &[1, 2, 3, 4]])),
        f("z5-rs-5-2", build(&[5], 5, &[&[1, 1, 1, 1, 1], &[0, 1, 2, 3, 4]])),
        f(
            "z5-rs-5-3",
            build(&[5], 5, &[&[1, 1, 1, 1, 1], &[0, 1, 2, 3, 4], &[0, 1, 4, 4, 1]]),
        ),
        f("z5-split-6-2", build(&[5], 6, &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1]])),
        f("z4-rep-3", repetition(4, 3)),
        f("z4-sum-zero-3", sum_zero(4, 3)),
        f("z4-4-2", build(&[4], 4, &[&[1, 0, 1, 1], &[0, 1, 1, 3]])),
        f("z4-half-4", build(&[4], 4, &[&[1, 1, 1, 1], &[0, 2, 2, 0]])),
        f("klein-rep-3", build(&[2, 2], 3, &[&[2, 2, 2], &[1, 1, 1]])),
        f(
            "klein-sum-zero-3",
            build(&[2, 2], 3, &[&[2, 2, 0], &[1, 1, 0], &[0, 2, 2], &[0, 1, 1]]),
        ),
        f("klein-half-3", build(&[2, 2], 3, &[&[2, 2, 2], &[1, 1, 0], &[0, 1, 1]])),
        f("klein-f4-mds-4-2", f4_mds_4_2()),
        f("z6-rep-3", repetition(6, 3)),
        f("z6-rep-4", repetition(6, 4)),
        f("z6-sum-zero-3", sum_zero(6, 3)),
        f("z6-mixed-3", build(&[6], 3, &[&[1, 1, 1], &[0, 2, 4]])),
    ]
}

fn curve(name: &'static str, p: u32, monomials: &[(u32, u32, u32, i64)], genus: u32) -> CurveFixture {
    CurveFixture {
        name,
        curve: PlaneCurve::new(p, monomials, genus).expect("fixture curve"),
    }
}

/// The line `X = 0` over `F_2`, `F_3`, `F_5`.
pub fn genus0_curves() -> Vec<CurveFixture> {
    vec![
        curve("line-f2", 2, &[(1, 0, 0, 1)], 0),
        curve("line-f3", 3, &[(1, 0, 0, 1)], 0),
        curve("line-f5", 5, &[(1, 0, 0, 1)], 0),
        curve("conic-f3", 3, &[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, -1)], 0),
    ]
}

/// Smooth plane cubics over `F_2`, `F_3`, `F_5`.
pub fn genus1_curves() -> Vec<CurveFixture> {
    vec![
        curve("cubic-f2", 2, &[(0, 2, 1, 1), (0, 1, 2, 1), (3, 0, 0, -1)], 1),
        curve(
            "cubic-f3",
            3,
            &[(0, 2, 1, 1), (3, 0, 0, -1), (1, 0, 2, -1), (0, 0, 3, -1)],
            1,
        ),
        curve(
            "cubic-f5",
            5,
            &[(0, 2, 1, 1), (3, 0, 0, -1), (1, 0, 2, -2), (0, 0, 3, -1)],
            1,
        ),
    ]
}
