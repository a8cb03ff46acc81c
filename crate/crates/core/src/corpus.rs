//! Bundled algebras and the reference data attached to them: dual brackets,
//! adjoint matrices and r-matrix families for the four two- and
//! three-dimensional examples, plus a few extra algebras for property tests.
//!
//! Two of the stated dual brackets contain sign slips and are stored corrected:
//!
//! * the Lie dual of `example1` is stated with the same brackets as its
//!   left Leibniz dual; the stored version is the antisymmetric reading
//!   (`[e^2, e^1] = a (e^1 + e^2)` instead of `[e^2, e^2]`), which is the
//!   bracket listed for `example2`;
//! * the eighth dual of `example4` is stated with `[e^2, e^3] = a e^1 - b e^2`,
//!   contradicting its "Lie" label and every cocycle form.
//!   The stored version is the antisymmetric `[e^2, e^3] = -a e^1 - b e^2`.
//!   [`example4_dual8_uncorrected`] keeps the uncorrected version.

use num::Zero;

use crate::adjoint::AdjointSet;
use crate::algebra::{Chirality, LeibnizAlgebra, StructureTensor};
use crate::bialgebra::DualFamily;
use crate::format::parse_algebra;
use crate::matrix::Matrix;
use crate::rational::{int, Rational};
use crate::rmatrix::{CoboundaryCase, RMatrixFamily};

pub const EXAMPLE1: &str = include_str!("../corpus/example1.alg");
pub const EXAMPLE2: &str = include_str!("../corpus/example2.alg");
pub const EXAMPLE3: &str = include_str!("../corpus/example3.alg");
pub const EXAMPLE4: &str = include_str!("../corpus/example4.alg");
pub const EXAMPLE3_R1: &str = include_str!("../corpus/example3-r1.r");
pub const EXAMPLE1_FAMILY1: &str = include_str!("../corpus/example1-family1.dual");

/// `(file name, contents)` for every bundled file.
pub const FILES: [(&str, &str); 6] = [
    ("example1.alg", EXAMPLE1),
    ("example2.alg", EXAMPLE2),
    ("example3.alg", EXAMPLE3),
    ("example4.alg", EXAMPLE4),
    ("example3-r1.r", EXAMPLE3_R1),
    ("example1-family1.dual", EXAMPLE1_FAMILY1),
];

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
}

fn load(text: &str) -> LeibnizAlgebra {
    parse_algebra(text)
        .and_then(|d| d.to_algebra())
        .expect("bundled corpus file is valid")
}

/// `[e1,e1] = e2, [e1,e2] = e2`, left Leibniz.
pub fn example1() -> LeibnizAlgebra {
    load(EXAMPLE1)
}

/// `[e1,e1] = e2, [e2,e1] = e2`, right Leibniz.
pub fn example2() -> LeibnizAlgebra {
    load(EXAMPLE2)
}

/// `[e1,e1] = e2`, both left and right Leibniz.
pub fn example3() -> LeibnizAlgebra {
    load(EXAMPLE3)
}

/// `[e1,e1] = e2, [e2,e1] = e3`, right Leibniz.
pub fn example4() -> LeibnizAlgebra {
    load(EXAMPLE4)
}

pub fn examples() -> Vec<LeibnizAlgebra> {
    vec![example1(), example2(), example3(), example4()]
}

pub fn example(number: u8) -> Option<LeibnizAlgebra> {
    match number {
        1 => Some(example1()),
        2 => Some(example2()),
        3 => Some(example3()),
        4 => Some(example4()),
        _ => None,
    }
}

/// The examples plus zero algebras, opposites, `sl2` and the Heisenberg
/// algebra: every chirality label except `Neither` in dimensions 2 and 3.
pub fn property_corpus() -> Vec<LeibnizAlgebra> {
    let mut out = examples();
    out.push(LeibnizAlgebra::new("zero2", StructureTensor::zero(2).expect("dim 2")));
    out.push(LeibnizAlgebra::new("zero3", StructureTensor::zero(3).expect("dim 3")));
    out.push(LeibnizAlgebra::new("example1-opposite", example1().tensor().opposite()));
    out.push(LeibnizAlgebra::new("example4-opposite", example4().tensor().opposite()));
    let sl2 = StructureTensor::from_int_brackets(
        3,
        &[
            (1, 2, 2, 2),
            (2, 1, 2, -2),
            (1, 3, 3, -2),
            (3, 1, 3, 2),
            (2, 3, 1, 1),
            (3, 2, 1, -1),
        ],
    )
    .expect("dim 3");
    out.push(LeibnizAlgebra::new("sl2", sl2));
    let heis = StructureTensor::from_int_brackets(3, &[(1, 2, 3, 1), (2, 1, 3, -1)]).expect("dim 3");
    out.push(LeibnizAlgebra::new("heisenberg", heis));
    out
}

/// A stated dual bracket, linear in its parameters.
#[derive(Debug, Clone)]
pub struct StatedDual {
    pub example: u8,
    pub number: u8,
    pub stated: Chirality,
    pub family: DualFamily,
    pub corrected: bool,
}

type Term = (usize, usize, usize, &'static [(i64, usize)]);

/// Builds a family from `[e^i, e^j] = sum (c * param) e^k` terms.
fn family(dim: usize, params: &[&str], terms: &'static [Term]) -> DualFamily {
    DualFamily::from_fn(dim, params, move |p: &[Rational]| {
        let mut t = StructureTensor::zero(dim).expect("valid dimension");
        for &(i, j, k, coeffs) in terms {
            let mut v = Rational::zero();
            for &(c, a) in coeffs {
                v += int(c) * &p[a];
            }
            let cur = t.get(i - 1, j - 1, k - 1) + v;
            t.set(i - 1, j - 1, k - 1, cur);
        }
        t
    })
}

const A: &[(i64, usize)] = &[(1, 0)];
const NEG_A: &[(i64, usize)] = &[(-1, 0)];
const B: &[(i64, usize)] = &[(1, 1)];
const NEG_B: &[(i64, usize)] = &[(-1, 1)];
const TWO_A: &[(i64, usize)] = &[(2, 0)];
const NEG_TWO_A: &[(i64, usize)] = &[(-2, 0)];

// [e^1,e^2] = -a(e^1+e^2), [e^2,e^2] = a(e^1+e^2)
const TWO_LEFT: &[Term] = &[(1, 2, 1, NEG_A), (1, 2, 2, NEG_A), (2, 2, 1, A), (2, 2, 2, A)];
// [e^1,e^2] = -a(e^1+e^2), [e^2,e^1] = a(e^1+e^2)
const TWO_LIE: &[Term] = &[(1, 2, 1, NEG_A), (1, 2, 2, NEG_A), (2, 1, 1, A), (2, 1, 2, A)];
// [e^2,e^1] = -a(e^1+e^2), [e^2,e^2] = a(e^1+e^2)
const TWO_RIGHT: &[Term] = &[(2, 1, 1, NEG_A), (2, 1, 2, NEG_A), (2, 2, 1, A), (2, 2, 2, A)];

fn dual(example: u8, number: u8, stated: Chirality, family: DualFamily, corrected: bool) -> StatedDual {
    StatedDual {
        example,
        number,
        stated,
        family,
        corrected,
    }
}

pub fn stated_duals(example: u8) -> Vec<StatedDual> {
    let a = &["a"];
    let ab = &["a", "b"];
    match example {
        1 => vec![
            dual(1, 1, Chirality::Left, family(2, a, TWO_LEFT), false),
            dual(1, 2, Chirality::Lie, family(2, a, TWO_LIE), true),
            dual(1, 3, Chirality::Right, family(2, a, TWO_RIGHT), false),
        ],
        2 => vec![
            dual(2, 1, Chirality::Left, family(2, a, TWO_LEFT), false),
            dual(2, 2, Chirality::Lie, family(2, a, TWO_LIE), false),
            dual(2, 3, Chirality::Right, family(2, a, TWO_RIGHT), false),
        ],
        3 => vec![
            dual(3, 1, Chirality::Lie, family(2, a, &[(1, 2, 1, NEG_A), (2, 1, 1, A)]), false),
            dual(3, 2, Chirality::Both, family(2, a, &[(2, 2, 1, A)]), false),
        ],
        4 => vec![
            dual(
                4,
                1,
                Chirality::Left,
                family(3, ab, &[(3, 3, 1, A), (3, 3, 2, B), (3, 2, 1, B)]),
                false,
            ),
            dual(4, 2, Chirality::Left, family(3, ab, &[(2, 3, 1, A), (3, 3, 1, B)]), false),
            dual(
                4,
                3,
                Chirality::Right,
                family(3, ab, &[(3, 3, 1, A), (3, 3, 2, B), (2, 3, 1, B)]),
                false,
            ),
            dual(4, 4, Chirality::Right, family(3, ab, &[(3, 2, 1, A), (3, 3, 1, B)]), false),
            dual(
                4,
                5,
                Chirality::Left,
                family(3, ab, &[(3, 2, 1, A), (2, 3, 1, NEG_A), (3, 3, 1, B)]),
                false,
            ),
            dual(
                4,
                6,
                Chirality::Lie,
                family(
                    3,
                    ab,
                    &[
                        (1, 2, 1, NEG_A),
                        (1, 3, 2, NEG_A),
                        (2, 1, 1, A),
                        (2, 3, 1, NEG_B),
                        (2, 3, 3, NEG_A),
                        (3, 2, 1, B),
                        (3, 2, 3, A),
                        (3, 1, 2, A),
                    ],
                ),
                false,
            ),
            dual(
                4,
                7,
                Chirality::Left,
                family(
                    3,
                    ab,
                    &[(2, 2, 1, NEG_A), (2, 3, 2, NEG_A), (3, 1, 1, TWO_A), (3, 2, 2, A), (3, 3, 1, B)],
                ),
                false,
            ),
            dual(
                4,
                8,
                Chirality::Lie,
                family(
                    3,
                    ab,
                    &[
                        (1, 3, 1, NEG_B),
                        (2, 3, 1, NEG_A),
                        (2, 3, 2, NEG_B),
                        (3, 1, 1, B),
                        (3, 2, 1, A),
                        (3, 2, 2, B),
                    ],
                ),
                true,
            ),
            dual(
                4,
                9,
                Chirality::Right,
                family(3, ab, &[(2, 3, 1, NEG_A), (3, 2, 1, A), (3, 3, 1, B)]),
                false,
            ),
            dual(
                4,
                10,
                Chirality::Right,
                family(
                    3,
                    ab,
                    &[(1, 3, 1, NEG_TWO_A), (2, 2, 1, A), (2, 3, 2, NEG_A), (3, 2, 2, A), (3, 3, 1, B)],
                ),
                false,
            ),
        ],
        _ => Vec::new(),
    }
}

/// The eighth dual of `example4` before the sign correction.
pub fn example4_dual8_uncorrected() -> DualFamily {
    family(
        3,
        &["a", "b"],
        &[
            (1, 3, 1, NEG_B),
            (2, 3, 1, A),
            (2, 3, 2, NEG_B),
            (3, 1, 1, B),
            (3, 2, 1, A),
            (3, 2, 2, B),
        ],
    )
}

fn families(example: u8) -> Vec<DualFamily> {
    stated_duals(example).into_iter().map(|d| d.family).collect()
}

pub fn example1_duals() -> Vec<DualFamily> {
    families(1)
}

pub fn example2_duals() -> Vec<DualFamily> {
    families(2)
}

pub fn example3_duals() -> Vec<DualFamily> {
    families(3)
}

pub fn example4_duals() -> Vec<DualFamily> {
    families(4)
}

/// Reference adjoint matrices, for golden comparison.
pub fn reference_adjoint_matrices(example: u8) -> Option<AdjointSet> {
    let m = |rows: &[&[i64]]| Matrix::from_ints(rows);
    let z2 = || m(&[&[0, 0], &[0, 0]]);
    let z3 = || m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    Some(match example {
        1 => AdjointSet {
            chi: vec![m(&[&[0, -1], &[0, -1]]), z2()],
            chi_prime: vec![m(&[&[0, -1], &[0, 0]]), m(&[&[0, -1], &[0, 0]])],
            y: vec![z2(), m(&[&[-1, -1], &[0, 0]])],
        },
        2 => AdjointSet {
            chi: vec![m(&[&[0, -1], &[0, 0]]), m(&[&[0, -1], &[0, 0]])],
            chi_prime: vec![m(&[&[0, -1], &[0, -1]]), z2()],
            y: vec![z2(), m(&[&[-1, 0], &[-1, 0]])],
        },
        3 => AdjointSet {
            chi: vec![m(&[&[0, -1], &[0, 0]]), z2()],
            chi_prime: vec![m(&[&[0, -1], &[0, 0]]), z2()],
            y: vec![z2(), m(&[&[-1, 0], &[0, 0]])],
        },
        4 => AdjointSet {
            chi: vec![
                m(&[&[0, -1, 0], &[0, 0, 0], &[0, 0, 0]]),
                m(&[&[0, 0, -1], &[0, 0, 0], &[0, 0, 0]]),
                z3(),
            ],
            chi_prime: vec![m(&[&[0, -1, 0], &[0, 0, -1], &[0, 0, 0]]), z3(), z3()],
            y: vec![
                z3(),
                m(&[&[-1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
                m(&[&[0, 0, 0], &[-1, 0, 0], &[0, 0, 0]]),
            ],
        },
        _ => return None,
    })
}

/// A stated r-matrix result: solving the coboundary equation for the
/// dual `family` under `case` gives `expected`, or nothing when `None`.
#[derive(Debug, Clone)]
pub struct StatedRFamily {
    pub example: u8,
    pub dual: u8,
    pub case: CoboundaryCase,
    /// The dual family, possibly with some parameters fixed.
    pub family: DualFamily,
    /// Parameter values at which infeasibility is claimed when `expected`
    /// is `None` (the claim is for nonzero parameters).
    pub sample: Vec<Rational>,
    pub expected: Option<RMatrixFamily>,
}

fn r2(rows: [[Rational; 2]; 2]) -> Matrix {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect())
}

fn r3(rows: [[Rational; 3]; 3]) -> Matrix {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect())
}

/// Display parameters come first (`a, b, c` or `b, a1..a6`); the dual
/// family's own parameter is tied to `a` (or `b`) as in the text.
pub fn stated_r_families(example: u8) -> Vec<StatedRFamily> {
    let z = Rational::zero;
    let fam = |n: usize| stated_duals(example).remove(n).family;
    let infeasible = |dual: u8, case| StatedRFamily {
        example,
        dual,
        case,
        family: fam(usize::from(dual) - 1),
        sample: vec![int(1)],
        expected: None,
    };
    let abc = |dual: u8, case, build: fn(&Rational, &Rational, &Rational) -> Matrix| StatedRFamily {
        example,
        dual,
        case,
        family: fam(usize::from(dual) - 1),
        sample: vec![int(1)],
        expected: Some(RMatrixFamily::from_fn(2, &["a"], 3, move |p| {
            (build(&p[0], &p[1], &p[2]), vec![p[0].clone()])
        })),
    };
    match example {
        1 => vec![
            abc(1, CoboundaryCase::Left4, |a, b, c| r2([[a.clone(), b.clone()], [-a, c.clone()]])),
            infeasible(2, CoboundaryCase::Left1),
            infeasible(2, CoboundaryCase::Left4),
            abc(3, CoboundaryCase::Left1, |a, b, c| r2([[a.clone(), -a], [b.clone(), c.clone()]])),
        ],
        2 => vec![
            abc(1, CoboundaryCase::Right4, |a, b, c| r2([[-a, b.clone()], [a.clone(), c.clone()]])),
            infeasible(2, CoboundaryCase::Right1),
            infeasible(2, CoboundaryCase::Right4),
            infeasible(3, CoboundaryCase::Right1),
            infeasible(3, CoboundaryCase::Right4),
        ],
        3 => vec![
            abc(2, CoboundaryCase::Right1, |a, b, c| {
                r2([[Rational::zero(), a.clone()], [b.clone(), c.clone()]])
            }),
            abc(2, CoboundaryCase::Left1, |a, b, c| {
                r2([[Rational::zero(), -a], [b.clone(), c.clone()]])
            }),
            abc(2, CoboundaryCase::Right4, |a, b, c| {
                r2([[Rational::zero(), b.clone()], [a.clone(), c.clone()]])
            }),
            abc(2, CoboundaryCase::Left4, |a, b, c| {
                r2([[Rational::zero(), b.clone()], [-a, c.clone()]])
            }),
        ],
        4 => {
            let at_a0 = |n: usize| fam(n).fix("a", &z()).expect("parameter a");
            vec![
                StatedRFamily {
                    example,
                    dual: 1,
                    case: CoboundaryCase::Right4,
                    family: at_a0(0),
                    sample: vec![int(1)],
                    expected: Some(RMatrixFamily::from_fn(3, &["b"], 7, |p| {
                        let [b, a1, a2, a3, a4, a5, a6] = [0, 1, 2, 3, 4, 5, 6].map(|i| p[i].clone());
                        (r3([[z(), a1, a2], [z(), a3, a4], [b.clone(), a5, a6]]), vec![b])
                    })),
                },
                StatedRFamily {
                    example,
                    dual: 3,
                    case: CoboundaryCase::Right1,
                    family: at_a0(2),
                    sample: vec![int(1)],
                    expected: Some(RMatrixFamily::from_fn(3, &["b"], 7, |p| {
                        let [b, a1, a2, a3, a4, a5, a6] = [0, 1, 2, 3, 4, 5, 6].map(|i| p[i].clone());
                        (r3([[z(), z(), b.clone()], [a1, a2, a3], [a4, a5, a6]]), vec![b])
                    })),
                },
            ]
        }
        _ => Vec::new(),
    }
}
