//! Exact-arithmetic toolkit for finite-dimensional Leibniz algebras and
//! their bialgebra structures.
//!
//! Algebras are given by structure constants `f[i][j][k]`, the coefficient
//! of `X_k` in `[X_i, X_j]`, over the rationals. On top of that the crate
//! provides adjoint matrices, the four actions on `G (x) G` and their
//! coboundary maps, the linear/quadratic systems for compatible dual
//! brackets, coboundary duals from an `r`-matrix, and Yang-Baxter checks.
//!
//! Indices in this API are 0-based. File formats, reports and witnesses
//! are 1-based.

pub mod actions;
pub mod adjoint;
pub mod algebra;
pub mod array;
pub mod bialgebra;
pub mod cli;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod format;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod report;
pub mod rmatrix;
pub mod sampling;

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

pub use algebra::{Chirality, LeibnizAlgebra, Side, StructureTensor};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use rational::Rational;
