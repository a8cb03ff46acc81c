//! Dense row-major arrays of exact rationals of arbitrary rank.
//!
//! Residuals, Schouten brackets and triple products are all returned as
//! [`Array`]s so a failing component can be located. Indices are 0-based
//! internally; [`Array::first_nonzero`] and [`Array::nonzero_entries`] report
//! 1-based indices.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num::Zero;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Array {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl Array {
    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        Array {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); len],
        }
    }

    /// Cube of side `dim` and the given rank.
    pub fn cube(dim: usize, rank: usize) -> Self {
        Array::zeros(&vec![dim; rank])
    }

    pub fn from_vec(shape: &[usize], data: Vec<Rational>) -> Self {
        assert_eq!(shape.iter().product::<usize>(), data.len(), "shape/data length mismatch");
        Array {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        let mut off = 0;
        for (&i, &s) in index.iter().zip(&self.shape) {
            debug_assert!(i < s, "index {i} out of bounds {s}");
            off = off * s + i;
        }
        off
    }

    /// Multi-index of a flat offset (0-based).
    pub fn unravel(&self, mut offset: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for (slot, &s) in idx.iter_mut().zip(&self.shape).rev() {
            *slot = offset % s;
            offset /= s;
        }
        idx
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero component in row-major order, with a 1-based index.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, Rational)> {
        self.data
            .iter()
            .position(|v| !v.is_zero())
            .map(|off| (one_based(&self.unravel(off)), self.data[off].clone()))
    }

    /// All nonzero components with 1-based indices, in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, Rational)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(off, v)| (one_based(&self.unravel(off)), v.clone()))
            .collect()
    }

    /// Reorders axes: `out[idx] = self[idx permuted]` where output axis `a`
    /// is input axis `axes[a]`.
    pub fn permute_axes(&self, axes: &[usize]) -> Array {
        assert_eq!(axes.len(), self.rank());
        let shape: Vec<usize> = axes.iter().map(|&a| self.shape[a]).collect();
        let mut out = Array::zeros(&shape);
        let mut src = vec![0; self.rank()];
        for off in 0..out.len() {
            let idx = out.unravel(off);
            for (a, &ax) in axes.iter().enumerate() {
                src[ax] = idx[a];
            }
            out.data[off] = self[&src[..]].clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Array {
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Compact listing of nonzero entries, `(i,j,..)=v`, 1-based.
    pub fn describe_nonzero(&self) -> String {
        let parts: Vec<String> = self
            .nonzero_entries()
            .into_iter()
            .map(|(idx, v)| {
                let idx: Vec<String> = idx.iter().map(ToString::to_string).collect();
                format!("({})={}", idx.join(","), format_rational(&v))
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

pub(crate) fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

impl Index<&[usize]> for Array {
    type Output = Rational;
    fn index(&self, index: &[usize]) -> &Rational {
        &self.data[self.offset(index)]
    }
}

impl IndexMut<&[usize]> for Array {
    fn index_mut(&mut self, index: &[usize]) -> &mut Rational {
        let off = self.offset(index);
        &mut self.data[off]
    }
}

impl<const N: usize> Index<[usize; N]> for Array {
    type Output = Rational;
    fn index(&self, index: [usize; N]) -> &Rational {
        &self.data[self.offset(&index)]
    }
}

impl<const N: usize> IndexMut<[usize; N]> for Array {
    fn index_mut(&mut self, index: [usize; N]) -> &mut Rational {
        let off = self.offset(&index);
        &mut self.data[off]
    }
}

impl Add for &Array {
    type Output = Array;
    fn add(self, rhs: &Array) -> Array {
        assert_eq!(self.shape, rhs.shape);
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Array {
    type Output = Array;
    fn sub(self, rhs: &Array) -> Array {
        assert_eq!(self.shape, rhs.shape);
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Array {
    type Output = Array;
    fn neg(self) -> Array {
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}
