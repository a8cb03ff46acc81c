//! Structure constants, the bracket they define, and the right/left Leibniz
//! identities.
//!
//! A [`StructureTensor`] of dimension `n` stores `f[i][j][k]`, the coefficient
//! of `X_k` in `[X_i, X_j]`. The same layout stores the constants of a dual
//! algebra, `[Xt^i, Xt^j] = ft[i][j][k] Xt^k`. Rust-side indices are 0-based;
//! files, reports and witnesses are 1-based.

use std::fmt;

use num::Zero;

use crate::array::Array;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::MAX_DIM;

/// Which Leibniz identity (or which action, or which complex) is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn parse(text: &str) -> Option<Side> {
        match text.trim().to_ascii_lowercase().as_str() {
            "l" | "left" => Some(Side::Left),
            "r" | "right" => Some(Side::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Which Leibniz identities an algebra satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Left,
    Right,
    /// Left and right, but not antisymmetric.
    Both,
    /// Antisymmetric and Leibniz, i.e. a Lie algebra.
    Lie,
    Neither,
}

impl Chirality {
    pub fn admits(self, side: Side) -> bool {
        matches!(
            (self, side),
            (Chirality::Lie | Chirality::Both, _) | (Chirality::Left, Side::Left) | (Chirality::Right, Side::Right)
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
            Chirality::Both => "both",
            Chirality::Lie => "lie",
            Chirality::Neither => "neither",
        }
    }

    /// Sides admitted, in the order left, right.
    pub fn sides(self) -> Vec<Side> {
        Side::BOTH.into_iter().filter(|&s| self.admits(s)).collect()
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    entries: Array,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(StructureTensor {
            dim,
            entries: Array::cube(dim, 3),
        })
    }

    /// Builds a tensor from 1-based `((i, j, k), value)` entries, the way
    /// brackets are written by hand: `[X_i, X_j] = value X_k + ...`.
    pub fn from_brackets(dim: usize, entries: &[((usize, usize, usize), Rational)]) -> Result<Self> {
        let mut t = StructureTensor::zero(dim)?;
        for ((i, j, k), v) in entries {
            for &idx in &[*i, *j, *k] {
                if idx == 0 || idx > dim {
                    return Err(Error::InvalidArgument(format!("index {idx} outside 1..={dim}")));
                }
            }
            t.entries[[i - 1, j - 1, k - 1]] += v;
        }
        Ok(t)
    }

    /// Brackets with small integer coefficients, 1-based.
    pub fn from_int_brackets(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let entries: Vec<_> = entries.iter().map(|&(i, j, k, v)| ((i, j, k), crate::rational::int(v))).collect();
        StructureTensor::from_brackets(dim, &entries)
    }

    /// Takes ownership of a rank-3 cube.
    pub fn from_array(entries: Array) -> Result<Self> {
        let shape = entries.shape().to_vec();
        if shape.len() != 3 || shape.iter().any(|&s| s != shape[0]) {
            return Err(Error::InvalidArgument(format!(
                "structure tensor must be an n*n*n cube, got shape {shape:?}"
            )));
        }
        check_dim(shape[0])?;
        Ok(StructureTensor { dim: shape[0], entries })
    }

    /// Tensor whose entries in (i, j, k) row-major order are `flat`.
    pub fn from_flat(dim: usize, flat: Vec<Rational>) -> Result<Self> {
        check_dim(dim)?;
        if flat.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: flat.len(),
            });
        }
        StructureTensor::from_array(Array::from_vec(&[dim, dim, dim], flat))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f[i][j][k]`, 0-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[[i, j, k]]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.entries[[i, j, k]] = value;
    }

    pub fn as_array(&self) -> &Array {
        &self.entries
    }

    /// Entries flattened in (i, j, k) lexicographic order.
    pub fn flat(&self) -> &[Rational] {
        self.entries.data()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// The opposite bracket `[x, y]' = [y, x]`.
    pub fn opposite(&self) -> StructureTensor {
        StructureTensor {
            dim: self.dim,
            entries: self.entries.permute_axes(&[1, 0, 2]),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| (self.get(i, j, k) + self.get(j, i, k)).is_zero())))
    }

    pub fn scale(&self, factor: &Rational) -> StructureTensor {
        StructureTensor {
            dim: self.dim,
            entries: self.entries.scale(factor),
        }
    }

    pub fn add(&self, other: &StructureTensor) -> Result<StructureTensor> {
        ensure_same_dim(self.dim, other.dim)?;
        Ok(StructureTensor {
            dim: self.dim,
            entries: &self.entries + &other.entries,
        })
    }

    /// Nonzero brackets as `[e_i,e_j] = ...` lines, 1-based.
    pub fn describe(&self) -> String {
        let n = self.dim;
        let mut lines = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<String> = (0..n)
                    .filter(|&k| !self.get(i, j, k).is_zero())
                    .map(|k| format!("{}*e{}", self.get(i, j, k), k + 1))
                    .collect();
                if !terms.is_empty() {
                    lines.push(format!("[e{},e{}] = {}", i + 1, j + 1, terms.join(" + ")));
                }
            }
        }
        if lines.is_empty() {
            "abelian".to_string()
        } else {
            lines.join(", ")
        }
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::DimensionLimit(dim))
    } else {
        Ok(())
    }
}

pub(crate) fn ensure_same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `[x, y]` for coordinate vectors.
pub fn bracket(t: &StructureTensor, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    let n = t.dim();
    ensure_same_dim(n, x.len())?;
    ensure_same_dim(n, y.len())?;
    let mut out = vec![Rational::zero(); n];
    for i in (0..n).filter(|&i| !x[i].is_zero()) {
        for j in (0..n).filter(|&j| !y[j].is_zero()) {
            let c = &x[i] * &y[j];
            for (k, slot) in out.iter_mut().enumerate() {
                let f = t.get(i, j, k);
                if !f.is_zero() {
                    *slot += &c * f;
                }
            }
        }
    }
    Ok(out)
}

/// Residual of the Leibniz identity, a rank-4 array `R[i][j][k][m]`.
///
/// * Right: `[[X_j,X_k],X_i] - [[X_j,X_i],X_k] - [X_j,[X_k,X_i]]`
/// * Left:  `[X_i,[X_j,X_k]] - [[X_i,X_j],X_k] - [X_j,[X_i,X_k]]`
///
/// component `m` of the vector. The identity holds iff the array is zero.
pub fn leibniz_residual(t: &StructureTensor, side: Side) -> Array {
    leibniz_bilinear(t, t, side)
}

/// Polarized Leibniz residual: the residual formula with the first factor of
/// each product taken from `s` and the second from `t`, so that
/// `leibniz_bilinear(t, t, side) == leibniz_residual(t, side)`.
pub fn leibniz_bilinear(s: &StructureTensor, t: &StructureTensor, side: Side) -> Array {
    let n = s.dim();
    assert_eq!(n, t.dim(), "leibniz_bilinear: dimension mismatch");
    let mut out = Array::cube(n, 4);
    let nonzero = |x: &StructureTensor| -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !x.get(i, j, k).is_zero() {
                        v.push((i, j, k));
                    }
                }
            }
        }
        v
    };
    let t_entries = nonzero(t);
    // entries of s contract with t on t's first or second slot
    for (a, b, p) in nonzero(s) {
        let u = s.get(a, b, p);
        for &(c, d, m) in &t_entries {
            let uv = u * t.get(c, d, m);
            match side {
                Side::Right => {
                    if c == p {
                        out[[d, a, b, m]] += &uv;
                        out[[b, a, d, m]] -= &uv;
                    }
                    if d == p {
                        out[[b, c, a, m]] -= &uv;
                    }
                }
                Side::Left => {
                    if d == p {
                        out[[c, a, b, m]] += &uv;
                        out[[a, c, b, m]] -= &uv;
                    }
                    if c == p {
                        out[[a, b, d, m]] -= &uv;
                    }
                }
            }
        }
    }
    out
}

pub fn classify_chirality(t: &StructureTensor) -> Chirality {
    let left = leibniz_residual(t, Side::Left).is_zero();
    let right = leibniz_residual(t, Side::Right).is_zero();
    match (left, right) {
        (true, true) if t.is_antisymmetric() => Chirality::Lie,
        (true, true) => Chirality::Both,
        (true, false) => Chirality::Left,
        (false, true) => Chirality::Right,
        (false, false) => Chirality::Neither,
    }
}

/// A tensor together with its (computed) chirality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    tensor: StructureTensor,
    chirality: Chirality,
}

impl LeibnizAlgebra {
    pub fn new(name: impl Into<String>, tensor: StructureTensor) -> Self {
        let chirality = classify_chirality(&tensor);
        LeibnizAlgebra {
            name: name.into(),
            tensor,
            chirality,
        }
    }

    /// Like [`LeibnizAlgebra::new`] but fails unless the tensor satisfies the
    /// identity for every side in `required`.
    pub fn with_sides(name: impl Into<String>, tensor: StructureTensor, required: &[Side]) -> Result<Self> {
        let alg = LeibnizAlgebra::new(name, tensor);
        for &side in required {
            alg.require(side, "declared chirality")?;
        }
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn admits(&self, side: Side) -> bool {
        self.chirality.admits(side)
    }

    pub(crate) fn require(&self, side: Side, what: &str) -> Result<()> {
        if self.admits(side) {
            Ok(())
        } else {
            let witness = leibniz_residual(&self.tensor, side)
                .first_nonzero()
                .map(|(idx, v)| format!(" (residual at {idx:?} is {v})"))
                .unwrap_or_default();
            Err(Error::Chirality(format!(
                "{what} requires a {side} Leibniz algebra, but '{}' is {}{witness}",
                self.name, self.chirality
            )))
        }
    }
}
