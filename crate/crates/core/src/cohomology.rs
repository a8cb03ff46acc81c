//! Leibniz cochains with values in `M = G (x) G`, the coboundary maps of
//! degree 0, 1 and 2, and the 1-cocycle condition on a dual bracket written
//! out in structure constants and in adjoint-matrix form.
//!
//! Outcome of the mechanical checks (tests below and in `tests/`): for every
//! corpus algebra, `gamma1 . gamma0 = 0` and `gamma2 . gamma1 = 0` hold for
//! each case on its natural complex (case 2 right, case 3 left, cases 1 and
//! 4 both). Running case 2 on the left complex, or case 3 on the right one,
//! breaks both identities on `[e1,e1] = e2`.

use std::fmt;

use num::Zero;

use crate::actions::{unit, ActionCase, Actions, TensorSquareElement};
use crate::adjoint::adjoint_set;
use crate::algebra::{ensure_same_dim, LeibnizAlgebra, Side, StructureTensor};
use crate::array::Array;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// `omega: G^arity -> G (x) G`, stored on basis tuples in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainMap {
    dim: usize,
    arity: usize,
    values: Vec<TensorSquareElement>,
}

impl CochainMap {
    pub fn new(dim: usize, arity: usize, values: Vec<TensorSquareElement>) -> Result<Self> {
        let expected = dim.pow(arity as u32);
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        Ok(CochainMap { dim, arity, values })
    }

    pub fn zero(dim: usize, arity: usize) -> Self {
        CochainMap {
            dim,
            arity,
            values: vec![TensorSquareElement::zero(dim); dim.pow(arity as u32)],
        }
    }

    pub fn constant(m: TensorSquareElement) -> Self {
        CochainMap {
            dim: m.dim(),
            arity: 0,
            values: vec![m],
        }
    }

    /// The 1-cochain `X_k -> sum ft[i][j][k] X_i (x) X_j` of a dual bracket.
    pub fn cocommutator(ft: &StructureTensor) -> Self {
        let n = ft.dim();
        let values = (0..n)
            .map(|k| TensorSquareElement::from_matrix(Matrix::from_fn(n, n, |i, j| ft.get(i, j, k).clone())))
            .collect();
        CochainMap { dim: n, arity: 1, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Value on basis elements, 0-based.
    pub fn at(&self, args: &[usize]) -> &TensorSquareElement {
        assert_eq!(args.len(), self.arity);
        let off = args.iter().fold(0, |acc, &i| acc * self.dim + i);
        &self.values[off]
    }

    pub fn values(&self) -> &[TensorSquareElement] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(TensorSquareElement::is_zero)
    }

    /// Extends linearly: `omega(sum x_i X_i, ...)` for the first argument.
    fn eval_linear(&self, first: &[Rational], rest: &[usize]) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero(self.dim);
        let mut args = Vec::with_capacity(self.arity);
        for (i, c) in first.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args.clear();
            args.push(i);
            args.extend_from_slice(rest);
            out = out.add(&self.at(&args).scale(c));
        }
        out
    }

    /// Linear in the second argument of a 2-cochain.
    fn eval_second(&self, first: usize, second: &[Rational]) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero(self.dim);
        for (i, c) in second.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.at(&[first, i]).scale(c));
            }
        }
        out
    }

    /// Rank-(arity + 2) array `[args..][s][t]`, 1-based when described.
    pub fn to_array(&self) -> Array {
        let n = self.dim;
        let mut shape = vec![n; self.arity + 2];
        if shape.is_empty() {
            shape = vec![n, n];
        }
        let mut data = Vec::with_capacity(self.values.len() * n * n);
        for v in &self.values {
            data.extend(v.coefficients.data().iter().cloned());
        }
        Array::from_vec(&shape, data)
    }
}

fn check(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> Result<()> {
    case.check(alg)?;
    alg.require(side, &format!("the {side} cochain complex"))?;
    ensure_same_dim(alg.dim(), w.dim())
}

/// `(gamma^0 m)(X) = [X, m]_L` on the right complex, `-[m, X]_R` on the left.
pub fn gamma0(alg: &LeibnizAlgebra, case: ActionCase, side: Side, m: &TensorSquareElement) -> Result<CochainMap> {
    let w = CochainMap::constant(m.clone());
    check(alg, case, side, &w)?;
    Ok(gamma0_unchecked(alg, case, side, m))
}

fn gamma0_unchecked(alg: &LeibnizAlgebra, case: ActionCase, side: Side, m: &TensorSquareElement) -> CochainMap {
    let n = alg.dim();
    let acts = Actions { case, f: alg.tensor() };
    let values = (0..n)
        .map(|x| match side {
            Side::Right => acts.left(&unit(n, x), m),
            Side::Left => acts.right(m, &unit(n, x)).neg(),
        })
        .collect();
    CochainMap { dim: n, arity: 1, values }
}

/// `(gamma^1 w)(X, Y) = [X, w(Y)]_L + [w(X), Y]_R - w([X, Y])` on either complex.
pub fn gamma1(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> Result<CochainMap> {
    check(alg, case, side, w)?;
    if w.arity() != 1 {
        return Err(Error::InvalidArgument(format!(
            "gamma1 expects a 1-cochain, got arity {}",
            w.arity()
        )));
    }
    Ok(gamma1_unchecked(alg, case, w))
}

fn gamma1_unchecked(alg: &LeibnizAlgebra, case: ActionCase, w: &CochainMap) -> CochainMap {
    let n = alg.dim();
    let acts = Actions { case, f: alg.tensor() };
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (unit(n, x), unit(n, y));
            let v = acts
                .left(&ex, w.at(&[y]))
                .add(&acts.right(w.at(&[x]), &ey))
                .sub(&w.eval_linear(&acts.bracket(&ex, &ey), &[]));
            values.push(v);
        }
    }
    CochainMap { dim: n, arity: 2, values }
}

/// Degree-2 coboundary. Right complex:
/// `[X,w(Y,Z)]_L + [w(X,Z),Y]_R - [w(X,Y),Z]_R - w([X,Y],Z) + w(X,[Y,Z]) + w([X,Z],Y)`;
/// left complex:
/// `[X,w(Y,Z)]_L - [Y,w(X,Z)]_L - [w(X,Y),Z]_R - w([X,Y],Z) + w(X,[Y,Z]) - w(Y,[X,Z])`.
pub fn gamma2(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> Result<CochainMap> {
    check(alg, case, side, w)?;
    if w.arity() != 2 {
        return Err(Error::InvalidArgument(format!(
            "gamma2 expects a 2-cochain, got arity {}",
            w.arity()
        )));
    }
    Ok(gamma2_unchecked(alg, case, side, w))
}

fn gamma2_unchecked(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> CochainMap {
    let n = alg.dim();
    let acts = Actions { case, f: alg.tensor() };
    let mut values = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (unit(n, x), unit(n, y), unit(n, z));
                let xy = acts.bracket(&ex, &ey);
                let yz = acts.bracket(&ey, &ez);
                let xz = acts.bracket(&ex, &ez);
                let v = match side {
                    Side::Right => acts
                        .left(&ex, w.at(&[y, z]))
                        .add(&acts.right(w.at(&[x, z]), &ey))
                        .sub(&acts.right(w.at(&[x, y]), &ez))
                        .sub(&w.eval_linear(&xy, &[z]))
                        .add(&w.eval_second(x, &yz))
                        .add(&w.eval_linear(&xz, &[y])),
                    Side::Left => acts
                        .left(&ex, w.at(&[y, z]))
                        .sub(&acts.left(&ey, w.at(&[x, z])))
                        .sub(&acts.right(w.at(&[x, y]), &ez))
                        .sub(&w.eval_linear(&xy, &[z]))
                        .add(&w.eval_second(x, &yz))
                        .sub(&w.eval_second(y, &xz)),
                };
                values.push(v);
            }
        }
    }
    CochainMap { dim: n, arity: 3, values }
}

/// Dispatches on the arity of `w`; arity 3 and above is rejected.
pub fn coboundary(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> Result<CochainMap> {
    match w.arity() {
        0 => gamma0(alg, case, side, w.at(&[])),
        1 => gamma1(alg, case, side, w),
        2 => gamma2(alg, case, side, w),
        k => Err(Error::UnsupportedArity(k)),
    }
}

/// `gamma^{k+1} w = 0`.
pub fn is_cocycle(alg: &LeibnizAlgebra, case: ActionCase, side: Side, w: &CochainMap) -> Result<bool> {
    Ok(coboundary(alg, case, side, w)?.is_zero())
}

/// Which of the four 1-cocycle conditions a dual bracket is tested against.
/// Form `k` is the cocycle condition for action case `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CocycleForm {
    Form1,
    Form2,
    Form3,
    Form4,
}

impl CocycleForm {
    pub const ALL: [CocycleForm; 4] = [CocycleForm::Form1, CocycleForm::Form2, CocycleForm::Form3, CocycleForm::Form4];

    pub fn number(self) -> u8 {
        self.case().number()
    }

    pub fn case(self) -> ActionCase {
        match self {
            CocycleForm::Form1 => ActionCase::Case1,
            CocycleForm::Form2 => ActionCase::Case2,
            CocycleForm::Form3 => ActionCase::Case3,
            CocycleForm::Form4 => ActionCase::Case4,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        CocycleForm::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }
}

/// Pairing of a primal chirality, a cocycle form and the chirality the dual
/// bracket must have. Labels read `<primal>-<form>-<dual>`, `LR` meaning
/// either chirality of the primal algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CocycleScenario {
    LR1R,
    R2R,
    R2L,
    LR4L,
    L3R,
    L3L,
}

impl CocycleScenario {
    pub const ALL: [CocycleScenario; 6] = [
        CocycleScenario::LR1R,
        CocycleScenario::R2R,
        CocycleScenario::R2L,
        CocycleScenario::LR4L,
        CocycleScenario::L3R,
        CocycleScenario::L3L,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CocycleScenario::LR1R => "LR-1-R",
            CocycleScenario::R2R => "R-2-R",
            CocycleScenario::R2L => "R-2-L",
            CocycleScenario::LR4L => "LR-4-L",
            CocycleScenario::L3R => "L-3-R",
            CocycleScenario::L3L => "L-3-L",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        CocycleScenario::ALL
            .into_iter()
            .find(|s| s.label().eq_ignore_ascii_case(text.trim()))
    }

    pub fn form(self) -> CocycleForm {
        match self {
            CocycleScenario::LR1R => CocycleForm::Form1,
            CocycleScenario::R2R | CocycleScenario::R2L => CocycleForm::Form2,
            CocycleScenario::LR4L => CocycleForm::Form4,
            CocycleScenario::L3R | CocycleScenario::L3L => CocycleForm::Form3,
        }
    }

    pub fn dual_side(self) -> Side {
        match self {
            CocycleScenario::LR1R | CocycleScenario::R2R | CocycleScenario::L3R => Side::Right,
            CocycleScenario::R2L | CocycleScenario::LR4L | CocycleScenario::L3L => Side::Left,
        }
    }

    /// `None` when either chirality of the primal algebra will do.
    pub fn primal_side(self) -> Option<Side> {
        self.form().case().required_side()
    }

    pub fn admits(self, alg: &LeibnizAlgebra) -> bool {
        match self.primal_side() {
            Some(side) => alg.admits(side),
            None => alg.admits(Side::Left) || alg.admits(Side::Right),
        }
    }

    pub(crate) fn check(self, alg: &LeibnizAlgebra) -> Result<()> {
        if self.admits(alg) {
            return Ok(());
        }
        let what = format!("scenario {}", self.label());
        match self.primal_side() {
            Some(side) => alg.require(side, &what),
            None => Err(Error::Chirality(format!(
                "{what} requires a left or right Leibniz algebra, but '{}' is {}",
                alg.name(),
                alg.chirality()
            ))),
        }
    }
}

impl fmt::Display for CocycleScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `sum_k f_ij^k ft^{mn}_k - (form-dependent right-hand side)`, indexed
/// `[i][j][m][n]`. The right-hand sides are
///
/// * form 1: `ft^{qn}_j f_iq^m + ft^{qn}_i f_qj^m`
/// * form 2: `ft^{mq}_i f_qj^n + ft^{qn}_i f_qj^m`
/// * form 3: `ft^{mq}_j f_iq^n + ft^{qn}_j f_iq^m`
/// * form 4: `ft^{mq}_j f_iq^n + ft^{mq}_i f_qj^n`
pub fn cocycle_residual_tensor(f: &StructureTensor, ft: &StructureTensor, form: CocycleForm) -> Result<Array> {
    ensure_same_dim(f.dim(), ft.dim())?;
    let n = f.dim();
    let mut out = Array::cube(n, 4);
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                for nn in 0..n {
                    let mut acc = Rational::zero();
                    for k in 0..n {
                        acc += f.get(i, j, k) * ft.get(m, nn, k);
                    }
                    for q in 0..n {
                        let rhs = match form {
                            CocycleForm::Form1 => ft.get(q, nn, j) * f.get(i, q, m) + ft.get(q, nn, i) * f.get(q, j, m),
                            CocycleForm::Form2 => ft.get(m, q, i) * f.get(q, j, nn) + ft.get(q, nn, i) * f.get(q, j, m),
                            CocycleForm::Form3 => ft.get(m, q, j) * f.get(i, q, nn) + ft.get(q, nn, j) * f.get(i, q, m),
                            CocycleForm::Form4 => ft.get(m, q, j) * f.get(i, q, nn) + ft.get(m, q, i) * f.get(q, j, nn),
                        };
                        acc -= rhs;
                    }
                    out[[i, j, m, nn]] = acc;
                }
            }
        }
    }
    Ok(out)
}

/// The same condition through adjoint matrices: `Y^k` of `f` and
/// `chi~^m`, `chi~'^n` of `ft`. Entry `m * dim + n` of the result is
///
/// * form 1: `Y^m chi~'^n + (chi~'^n)^t Y^m - (chi~^m)_{nk} Y^k`
/// * form 2: `(chi~^m)^t Y^n + (chi~'^n)^t Y^m - (chi~^m)_{nk} Y^k`
/// * form 3: `Y^n chi~^m + Y^m chi~'^n - (chi~^m)_{nk} Y^k`
/// * form 4: `Y^n chi~^m + (chi~^m)^t Y^n - (chi~^m)_{nk} Y^k`
///
/// The matrix residual is the negated tensor residual, see
/// [`residual_matrices_as_tensor`].
pub fn cocycle_residual_matrix(f: &StructureTensor, ft: &StructureTensor, form: CocycleForm) -> Result<Vec<Matrix>> {
    ensure_same_dim(f.dim(), ft.dim())?;
    let n = f.dim();
    let primal = adjoint_set(f);
    let dual = adjoint_set(ft);
    let y = &primal.y;
    let (chi, chi_p) = (&dual.chi, &dual.chi_prime);
    let mut out = Vec::with_capacity(n * n);
    for m in 0..n {
        for nn in 0..n {
            let mut lhs = Matrix::zeros(n, n);
            for (k, yk) in y.iter().enumerate() {
                let c = &chi[m][(nn, k)];
                if !c.is_zero() {
                    lhs = &lhs + &yk.scale(c);
                }
            }
            let rhs = match form {
                CocycleForm::Form1 => &(&y[m] * &chi_p[nn]) + &(&chi_p[nn].transpose() * &y[m]),
                CocycleForm::Form2 => &(&chi[m].transpose() * &y[nn]) + &(&chi_p[nn].transpose() * &y[m]),
                CocycleForm::Form3 => &(&y[nn] * &chi[m]) + &(&y[m] * &chi_p[nn]),
                CocycleForm::Form4 => &(&y[nn] * &chi[m]) + &(&chi[m].transpose() * &y[nn]),
            };
            out.push(&rhs - &lhs);
        }
    }
    Ok(out)
}

/// Re-indexes matrix residuals into the tensor layout: `[i][j][m][n] = -M_{(m,n)}[i][j]`.
pub fn residual_matrices_as_tensor(matrices: &[Matrix]) -> Array {
    let n = matrices.first().map_or(0, Matrix::rows);
    let mut out = Array::cube(n, 4);
    for m in 0..n {
        for nn in 0..n {
            let mat = &matrices[m * n + nn];
            for i in 0..n {
                for j in 0..n {
                    out[[i, j, m, nn]] = -mat[(i, j)].clone();
                }
            }
        }
    }
    out
}
