//! Adjoint and coadjoint matrices.
//!
//! For a tensor `f` the three matrix families are
//!
//! * `chi[i]`:       row `j`, column `k` holds `-f[i][j][k]`
//! * `chi_prime[m]`: row `i`, column `k` holds `-f[i][m][k]`
//! * `y[k]`:         row `i`, column `j` holds `-f[i][j][k]`
//!
//! Applied to a dual tensor the same construction yields the dual families
//! (`chi~^i`, `chi~'^j`, `Y~_k`).
//!
//! Operator convention: a matrix `A` of this module represents the linear
//! map `v -> -v A` on row coordinate vectors. Under that convention `chi[i]`
//! represents `ad^(l)_{X_i}`, `chi_prime[i]` represents `ad^(r)_{X_i}`, and
//! the coadjoint matrices are the negated transposes `-chi[i]^T`,
//! `-chi_prime[i]^T`, so that `<ad* xi, Y> = -<xi, ad Y>`.

use num::Zero;

use crate::algebra::{Side, StructureTensor};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointSet {
    pub chi: Vec<Matrix>,
    pub chi_prime: Vec<Matrix>,
    pub y: Vec<Matrix>,
}

impl AdjointSet {
    pub fn dim(&self) -> usize {
        self.chi.len()
    }

    /// Rebuilds the tensor from `chi` alone.
    pub fn tensor_from_chi(&self) -> Result<StructureTensor> {
        let n = self.dim();
        rebuild(n, |i, j, k| -self.chi[i][(j, k)].clone())
    }

    pub fn tensor_from_chi_prime(&self) -> Result<StructureTensor> {
        let n = self.dim();
        rebuild(n, |i, j, k| -self.chi_prime[j][(i, k)].clone())
    }

    pub fn tensor_from_y(&self) -> Result<StructureTensor> {
        let n = self.dim();
        rebuild(n, |i, j, k| -self.y[k][(i, j)].clone())
    }

    /// The matrix of `ad^(side)` for a general element with coordinates `x`.
    pub fn ad(&self, side: Side, x: &[Rational]) -> Matrix {
        let set = match side {
            Side::Left => &self.chi,
            Side::Right => &self.chi_prime,
        };
        combine(set, x)
    }
}

fn rebuild(n: usize, f: impl Fn(usize, usize, usize) -> Rational) -> Result<StructureTensor> {
    let mut flat = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                flat.push(f(i, j, k));
            }
        }
    }
    StructureTensor::from_flat(n, flat)
}

fn combine(set: &[Matrix], x: &[Rational]) -> Matrix {
    assert_eq!(set.len(), x.len());
    let n = set.len();
    set.iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .fold(Matrix::zeros(n, n), |acc, (m, c)| &acc + &m.scale(c))
}

pub fn adjoint_set(t: &StructureTensor) -> AdjointSet {
    let n = t.dim();
    let chi = (0..n).map(|i| Matrix::from_fn(n, n, |j, k| -t.get(i, j, k).clone())).collect();
    let chi_prime = (0..n).map(|m| Matrix::from_fn(n, n, |i, k| -t.get(i, m, k).clone())).collect();
    let y = (0..n).map(|k| Matrix::from_fn(n, n, |i, j| -t.get(i, j, k).clone())).collect();
    AdjointSet { chi, chi_prime, y }
}

/// Right and left coadjoint matrices, `ad*^(l)_{X_i}` and `ad*^(r)_{X_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoadjointSet {
    pub ad_star_left: Vec<Matrix>,
    pub ad_star_right: Vec<Matrix>,
}

impl CoadjointSet {
    pub fn dim(&self) -> usize {
        self.ad_star_left.len()
    }

    /// Coadjoint matrix for a general element with coordinates `x`.
    pub fn ad_star(&self, side: Side, x: &[Rational]) -> Matrix {
        let set = match side {
            Side::Left => &self.ad_star_left,
            Side::Right => &self.ad_star_right,
        };
        combine(set, x)
    }
}

pub fn coadjoint_set(a: &AdjointSet) -> CoadjointSet {
    CoadjointSet {
        ad_star_left: a.chi.iter().map(|m| -&m.transpose()).collect(),
        ad_star_right: a.chi_prime.iter().map(|m| -&m.transpose()).collect(),
    }
}

/// Applies a matrix under the module convention `v -> -v A`.
pub fn act_on(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.left_apply(v).into_iter().map(|x| -x).collect()
}
