//! The four actions of a Leibniz algebra `G` on `G (x) G` and the module
//! axioms they are meant to satisfy.
//!
//! With `ad^(l)_X(Z) = [X, Z]` and `ad^(r)_X(Z) = [Z, X]`:
//!
//! | case | `[X, u]_L`                       | `[u, X]_R`                        | requires |
//! |------|----------------------------------|-----------------------------------|----------|
//! | 1    | `(ad^(l)_X (x) 1) u`             | `(ad^(r)_X (x) 1) u`              | any      |
//! | 2    | `0`                              | `(1 (x) ad^(r)_X + ad^(r)_X (x) 1) u` | right |
//! | 3    | `(1 (x) ad^(l)_X + ad^(l)_X (x) 1) u` | `0`                          | left     |
//! | 4    | `(1 (x) ad^(l)_X) u`             | `(1 (x) ad^(r)_X) u`              | any      |
//!
//! Findings from mechanical checks on the bundled corpus (see the tests):
//! every case satisfies the module axioms of its own chirality. Case 2 is a
//! right-module construction and case 3 a left-module construction: on the
//! two-sided algebra `[e1,e1] = e2`, case 2 violates the first *left* axiom
//! and case 3 violates the first *right* axiom.

use std::fmt;

use num::Zero;

use crate::algebra::{bracket, LeibnizAlgebra, Side, StructureTensor};
use crate::array::Array;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl ActionCase {
    pub const ALL: [ActionCase; 4] = [ActionCase::Case1, ActionCase::Case2, ActionCase::Case3, ActionCase::Case4];

    pub fn number(self) -> u8 {
        match self {
            ActionCase::Case1 => 1,
            ActionCase::Case2 => 2,
            ActionCase::Case3 => 3,
            ActionCase::Case4 => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<ActionCase> {
        ActionCase::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }

    /// The chirality the algebra must have for the case to be defined.
    pub fn required_side(self) -> Option<Side> {
        match self {
            ActionCase::Case2 => Some(Side::Right),
            ActionCase::Case3 => Some(Side::Left),
            ActionCase::Case1 | ActionCase::Case4 => None,
        }
    }

    /// Module-axiom sets (and cochain complexes) this case is built for.
    pub fn natural_sides(self) -> &'static [Side] {
        match self {
            ActionCase::Case2 => &[Side::Right],
            ActionCase::Case3 => &[Side::Left],
            ActionCase::Case1 | ActionCase::Case4 => &Side::BOTH,
        }
    }

    pub(crate) fn check(self, alg: &LeibnizAlgebra) -> Result<()> {
        match self.required_side() {
            Some(side) => alg.require(side, &format!("action case {}", self.number())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for ActionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

/// `sum c[a][b] X_a (x) X_b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorSquareElement {
    pub coefficients: Matrix,
}

impl TensorSquareElement {
    pub fn zero(dim: usize) -> Self {
        TensorSquareElement {
            coefficients: Matrix::zeros(dim, dim),
        }
    }

    /// `X_a (x) X_b`, 0-based.
    pub fn basis(dim: usize, a: usize, b: usize) -> Self {
        let mut e = TensorSquareElement::zero(dim);
        e.coefficients[(a, b)] = crate::rational::one();
        e
    }

    pub fn from_matrix(coefficients: Matrix) -> Self {
        assert_eq!(coefficients.rows(), coefficients.cols());
        TensorSquareElement { coefficients }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        TensorSquareElement::from_matrix(&self.coefficients + &other.coefficients)
    }

    pub fn sub(&self, other: &Self) -> Self {
        TensorSquareElement::from_matrix(&self.coefficients - &other.coefficients)
    }

    pub fn neg(&self) -> Self {
        TensorSquareElement::from_matrix(-&self.coefficients)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TensorSquareElement::from_matrix(self.coefficients.scale(c))
    }
}

/// `(ad (x) 1) u` or `(1 (x) ad) u` for the basis element `x`.
fn apply_ad(f: &StructureTensor, x: usize, ad: Side, factor: usize, u: &Matrix) -> Matrix {
    let n = f.dim();
    // ad^(l)_x(X_a) = f[x][a][s] X_s,   ad^(r)_x(X_a) = f[a][x][s] X_s
    let coeff = |a: usize, s: usize| -> &Rational {
        match ad {
            Side::Left => f.get(x, a, s),
            Side::Right => f.get(a, x, s),
        }
    };
    let mut out = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let c = &u[(a, b)];
            if c.is_zero() {
                continue;
            }
            for s in 0..n {
                let k = coeff(if factor == 0 { a } else { b }, s);
                if k.is_zero() {
                    continue;
                }
                if factor == 0 {
                    out[(s, b)] += c * k;
                } else {
                    out[(a, s)] += c * k;
                }
            }
        }
    }
    out
}

fn act_unchecked(case: ActionCase, side: Side, f: &StructureTensor, x: usize, u: &TensorSquareElement) -> TensorSquareElement {
    let u = &u.coefficients;
    let m = match (case, side) {
        (ActionCase::Case1, Side::Left) => apply_ad(f, x, Side::Left, 0, u),
        (ActionCase::Case1, Side::Right) => apply_ad(f, x, Side::Right, 0, u),
        (ActionCase::Case2, Side::Left) | (ActionCase::Case3, Side::Right) => Matrix::zeros(f.dim(), f.dim()),
        (ActionCase::Case2, Side::Right) => &apply_ad(f, x, Side::Right, 1, u) + &apply_ad(f, x, Side::Right, 0, u),
        (ActionCase::Case3, Side::Left) => &apply_ad(f, x, Side::Left, 1, u) + &apply_ad(f, x, Side::Left, 0, u),
        (ActionCase::Case4, Side::Left) => apply_ad(f, x, Side::Left, 1, u),
        (ActionCase::Case4, Side::Right) => apply_ad(f, x, Side::Right, 1, u),
    };
    TensorSquareElement::from_matrix(m)
}

/// Linear-in-X form used by the axioms and coboundary maps.
pub(crate) struct Actions<'a> {
    pub case: ActionCase,
    pub f: &'a StructureTensor,
}

impl Actions<'_> {
    /// `[X, u]_L` for `X = sum x_i X_i`.
    pub fn left(&self, x: &[Rational], u: &TensorSquareElement) -> TensorSquareElement {
        self.combine(Side::Left, x, u)
    }

    /// `[u, X]_R`.
    pub fn right(&self, u: &TensorSquareElement, x: &[Rational]) -> TensorSquareElement {
        self.combine(Side::Right, x, u)
    }

    fn combine(&self, side: Side, x: &[Rational], u: &TensorSquareElement) -> TensorSquareElement {
        let n = self.f.dim();
        let mut out = TensorSquareElement::zero(n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&act_unchecked(self.case, side, self.f, i, u).scale(c));
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bracket(self.f, x, y).expect("dimensions checked by caller")
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Rational> {
    (0..dim)
        .map(|k| if k == i { crate::rational::one() } else { Rational::zero() })
        .collect()
}

/// `[X_x, u]_L` (side = Left) or `[u, X_x]_R` (side = Right), `x` 0-based.
pub fn act(case: ActionCase, side: Side, alg: &LeibnizAlgebra, x: usize, u: &TensorSquareElement) -> Result<TensorSquareElement> {
    case.check(alg)?;
    let n = alg.dim();
    if u.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.dim(),
        });
    }
    if x >= n {
        return Err(Error::InvalidArgument(format!("basis index {} outside 1..={n}", x + 1)));
    }
    Ok(act_unchecked(case, side, alg.tensor(), x, u))
}

/// One module axiom evaluated on every basis triple `(X_x, X_y, X_a (x) X_b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResidual {
    pub side: Side,
    /// 1, 2 or 3 in the order the axioms are usually listed.
    pub axiom: u8,
    /// Indexed `[x][y][a][b][s][t]`: component `X_s (x) X_t` of the residual
    /// at `X = X_x`, `Y = X_y`, `m = X_a (x) X_b`.
    pub residual: Array,
}

impl AxiomResidual {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Residuals of the three module axioms of `side` for the given case.
/// Only fails if the case itself is undefined for the algebra; an algebra
/// that does not admit `side` still gets its residuals evaluated.
pub fn module_axiom_residuals_for_side(case: ActionCase, side: Side, alg: &LeibnizAlgebra) -> Result<Vec<AxiomResidual>> {
    case.check(alg)?;
    let n = alg.dim();
    let acts = Actions { case, f: alg.tensor() };
    let mut out: Vec<AxiomResidual> = (1..=3)
        .map(|axiom| AxiomResidual {
            side,
            axiom,
            residual: Array::cube(n, 6),
        })
        .collect();
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (unit(n, x), unit(n, y));
            for a in 0..n {
                for b in 0..n {
                    let m = TensorSquareElement::basis(n, a, b);
                    let values = match side {
                        Side::Right => {
                            let xy = acts.bracket(&ex, &ey);
                            let yx = acts.bracket(&ey, &ex);
                            [
                                // [[X,Y],m]_L - [[X,m]_L,Y]_R - [X,[Y,m]_L]_L
                                acts.left(&xy, &m)
                                    .sub(&acts.right(&acts.left(&ex, &m), &ey))
                                    .sub(&acts.left(&ex, &acts.left(&ey, &m))),
                                // [[m,Y]_R,X]_R - [[m,X]_R,Y]_R - [m,[Y,X]]_R
                                acts.right(&acts.right(&m, &ey), &ex)
                                    .sub(&acts.right(&acts.right(&m, &ex), &ey))
                                    .sub(&acts.right(&m, &yx)),
                                // [[Y,m]_L,X]_R - [[Y,X],m]_L - [Y,[m,X]_R]_L
                                acts.right(&acts.left(&ey, &m), &ex)
                                    .sub(&acts.left(&yx, &m))
                                    .sub(&acts.left(&ey, &acts.right(&m, &ex))),
                            ]
                        }
                        Side::Left => {
                            let xy = acts.bracket(&ex, &ey);
                            [
                                // [m,[X,Y]]_R - [[m,X]_R,Y]_R - [X,[m,Y]_R]_L
                                acts.right(&m, &xy)
                                    .sub(&acts.right(&acts.right(&m, &ex), &ey))
                                    .sub(&acts.left(&ex, &acts.right(&m, &ey))),
                                // [X,[m,Y]_R]_L - [[X,m]_L,Y]_R - [m,[X,Y]]_R
                                acts.left(&ex, &acts.right(&m, &ey))
                                    .sub(&acts.right(&acts.left(&ex, &m), &ey))
                                    .sub(&acts.right(&m, &xy)),
                                // [X,[Y,m]_L]_L - [[X,Y],m]_L - [Y,[X,m]_L]_L
                                acts.left(&ex, &acts.left(&ey, &m))
                                    .sub(&acts.left(&xy, &m))
                                    .sub(&acts.left(&ey, &acts.left(&ex, &m))),
                            ]
                        }
                    };
                    for (slot, v) in out.iter_mut().zip(values) {
                        for s in 0..n {
                            for t in 0..n {
                                slot.residual[[x, y, a, b, s, t]] = v.coefficients[(s, t)].clone();
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Module-axiom residuals for every side that both the algebra admits and
/// the case is built for (right set first... see [`ActionCase::natural_sides`]).
pub fn module_axiom_residuals(case: ActionCase, alg: &LeibnizAlgebra) -> Result<Vec<AxiomResidual>> {
    case.check(alg)?;
    let mut out = Vec::new();
    for &side in case.natural_sides() {
        if alg.admits(side) {
            out.extend(module_axiom_residuals_for_side(case, side, alg)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn e11(n: usize) -> TensorSquareElement {
        TensorSquareElement::basis(n, 0, 0)
    }

    #[test]
    fn case1_left_action_on_example_one() {
        let alg = corpus::example1();
        let out = act(ActionCase::Case1, Side::Left, &alg, 0, &e11(2)).unwrap();
        assert_eq!(out, TensorSquareElement::basis(2, 1, 0));
    }

    #[test]
    fn case4_right_action_on_example_two() {
        let alg = corpus::example2();
        let out = act(ActionCase::Case4, Side::Right, &alg, 0, &e11(2)).unwrap();
        assert_eq!(out, TensorSquareElement::basis(2, 0, 1));
    }

    #[test]
    fn case2_left_and_case3_right_vanish() {
        let alg = corpus::example3();
        for x in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    let u = TensorSquareElement::basis(2, a, b);
                    assert!(act(ActionCase::Case2, Side::Left, &alg, x, &u).unwrap().is_zero());
                    assert!(act(ActionCase::Case3, Side::Right, &alg, x, &u).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn chirality_requirements() {
        let err = act(ActionCase::Case2, Side::Left, &corpus::example1(), 0, &e11(2)).unwrap_err();
        assert!(err.to_string().contains("right"), "{err}");
        assert!(act(ActionCase::Case3, Side::Left, &corpus::example2(), 0, &e11(2)).is_err());
        assert!(module_axiom_residuals(ActionCase::Case3, &corpus::example4()).is_err());
    }

    #[test]
    fn module_axioms_hold_on_corpus() {
        let mut algebras = corpus::examples();
        algebras.push(LeibnizAlgebra::new("zero", StructureTensor::zero(2).unwrap()));
        for alg in &algebras {
            for case in ActionCase::ALL {
                let Ok(residuals) = module_axiom_residuals(case, alg) else {
                    continue;
                };
                assert!(!residuals.is_empty());
                for r in residuals {
                    assert!(
                        r.holds(),
                        "{} {case} {} axiom {}: {:?}",
                        alg.name(),
                        r.side,
                        r.axiom,
                        r.residual.first_nonzero()
                    );
                }
            }
        }
        let sets = module_axiom_residuals(ActionCase::Case3, &corpus::example1()).unwrap();
        assert_eq!(sets.len(), 3);
        let sets = module_axiom_residuals(ActionCase::Case2, &corpus::example2()).unwrap();
        assert_eq!(sets.len(), 3);
    }

    #[test]
    fn one_sided_cases_fail_the_opposite_axioms() {
        let ex3 = corpus::example3();
        let left = module_axiom_residuals_for_side(ActionCase::Case2, Side::Left, &ex3).unwrap();
        assert!(!left[0].holds());
        assert!(left[1].holds() && left[2].holds());
        let right = module_axiom_residuals_for_side(ActionCase::Case3, Side::Right, &ex3).unwrap();
        assert!(!right[0].holds());
        assert!(right[1].holds() && right[2].holds());
    }
}
