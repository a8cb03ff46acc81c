//! Plain-text definition files for algebras, dual tensors and r-matrices.
//!
//! ```text
//! # comment
//! name: example1
//! dim: 2
//! side: left          # left | right | both | auto (default auto)
//! f 1 1 2 = 1         # [e1, e1] has coefficient 1 on e2
//! f 1 2 2 = 1/1
//! ```
//!
//! An r-matrix file uses the same header with `r <i> <j> = <p>/<q>` lines.
//! Indices are 1-based, entries not listed are zero, and every line may
//! appear in any order. A trailing `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use crate::algebra::{classify_chirality, LeibnizAlgebra, Side, StructureTensor};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::MAX_DIM;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeclaredSide {
    Left,
    Right,
    Both,
    Auto,
}

impl DeclaredSide {
    pub fn name(self) -> &'static str {
        match self {
            DeclaredSide::Left => "left",
            DeclaredSide::Right => "right",
            DeclaredSide::Both => "both",
            DeclaredSide::Auto => "auto",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "left" => DeclaredSide::Left,
            "right" => DeclaredSide::Right,
            "both" => DeclaredSide::Both,
            "auto" => DeclaredSide::Auto,
            _ => return None,
        })
    }

    fn sides(self) -> &'static [Side] {
        match self {
            DeclaredSide::Left => &[Side::Left],
            DeclaredSide::Right => &[Side::Right],
            DeclaredSide::Both => &Side::BOTH,
            DeclaredSide::Auto => &[],
        }
    }
}

/// A parsed definition file. `entries` holds 1-based index tuples in file
/// order: `(i, j, k)` for `f` lines, `(i, j)` padded with `k = 0` for `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub declared_side: DeclaredSide,
    pub brackets: Vec<(usize, usize, usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrixDocument {
    pub name: String,
    pub dim: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

#[derive(PartialEq)]
enum Kind {
    Bracket,
    RMatrix,
}

struct Raw {
    name: String,
    dim: usize,
    side: Option<(usize, DeclaredSide)>,
    lines: Vec<(usize, Vec<usize>, Rational)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_raw(text: &str, kind: Kind) -> Result<Raw> {
    let (tag, arity) = match kind {
        Kind::Bracket => ("f", 3),
        Kind::RMatrix => ("r", 2),
    };
    let mut name = None;
    let mut dim = None;
    let mut side = None;
    let mut lines = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "name" => {
                    if name.replace(value.to_string()).is_some() {
                        return Err(parse_error(lineno, "duplicate name"));
                    }
                }
                "dim" => {
                    let n: usize = value
                        .parse()
                        .map_err(|_| parse_error(lineno, format!("invalid dimension `{value}`")))?;
                    if n == 0 {
                        return Err(parse_error(lineno, "dimension must be positive"));
                    }
                    if n > MAX_DIM {
                        return Err(Error::DimensionLimit(n));
                    }
                    if dim.replace(n).is_some() {
                        return Err(parse_error(lineno, "duplicate dim"));
                    }
                }
                "side" if kind == Kind::Bracket => {
                    let s = DeclaredSide::parse(value).ok_or_else(|| parse_error(lineno, format!("unknown side `{value}`")))?;
                    if side.replace((lineno, s)).is_some() {
                        return Err(parse_error(lineno, "duplicate side"));
                    }
                }
                other => return Err(parse_error(lineno, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| parse_error(lineno, format!("expected `{tag} ... = value` or `key: value`")))?;
        let mut words = lhs.split_whitespace();
        if words.next() != Some(tag) {
            return Err(parse_error(lineno, format!("expected a `{tag}` line")));
        }
        let idx: Vec<usize> = words
            .map(|w| w.parse::<usize>().map_err(|_| parse_error(lineno, format!("invalid index `{w}`"))))
            .collect::<Result<_>>()?;
        if idx.len() != arity {
            return Err(parse_error(lineno, format!("expected {arity} indices, found {}", idx.len())));
        }
        let value = parse_rational(rhs.trim()).ok_or_else(|| parse_error(lineno, format!("invalid rational `{}`", rhs.trim())))?;
        lines.push((lineno, idx, value));
    }
    let dim = dim.ok_or_else(|| parse_error(0, "missing `dim:` header"))?;
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, idx, _) in &lines {
        if let Some(bad) = idx.iter().find(|&&i| i == 0 || i > dim) {
            return Err(parse_error(*lineno, format!("index {bad} out of range 1..={dim}")));
        }
        if !seen.insert(idx.clone()) {
            return Err(parse_error(*lineno, format!("duplicate entry {tag} {:?}", idx)));
        }
    }
    Ok(Raw {
        name: name.unwrap_or_default(),
        dim,
        side,
        lines,
    })
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let raw = parse_raw(text, Kind::Bracket)?;
    Ok(AlgebraDocument {
        name: raw.name,
        dim: raw.dim,
        declared_side: raw.side.map_or(DeclaredSide::Auto, |(_, s)| s),
        brackets: raw.lines.into_iter().map(|(_, i, v)| (i[0], i[1], i[2], v)).collect(),
    })
}

pub fn parse_rmatrix(text: &str) -> Result<RMatrixDocument> {
    let raw = parse_raw(text, Kind::RMatrix)?;
    Ok(RMatrixDocument {
        name: raw.name,
        dim: raw.dim,
        entries: raw.lines.into_iter().map(|(_, i, v)| (i[0], i[1], v)).collect(),
    })
}

impl AlgebraDocument {
    pub fn tensor(&self) -> Result<StructureTensor> {
        let entries: Vec<_> = self.brackets.iter().map(|(i, j, k, v)| ((*i, *j, *k), v.clone())).collect();
        StructureTensor::from_brackets(self.dim, &entries)
    }

    /// Builds the algebra, checking a declared chirality. `auto` classifies.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        let name = if self.name.is_empty() { "unnamed" } else { &self.name };
        LeibnizAlgebra::with_sides(name, self.tensor()?, self.declared_side.sides())
    }

    pub fn from_tensor(name: &str, declared_side: DeclaredSide, t: &StructureTensor) -> Self {
        let mut brackets = Vec::new();
        for (idx, v) in t.as_array().nonzero_entries() {
            brackets.push((idx[0], idx[1], idx[2], v));
        }
        AlgebraDocument {
            name: name.to_string(),
            dim: t.dim(),
            declared_side,
            brackets,
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "name: {}", self.name);
        }
        let _ = writeln!(out, "dim: {}", self.dim);
        let _ = writeln!(out, "side: {}", self.declared_side.name());
        for (i, j, k, v) in &self.brackets {
            let _ = writeln!(out, "f {i} {j} {k} = {}", format_rational(v));
        }
        out
    }

    /// The inferred chirality, regardless of what was declared.
    pub fn inferred(&self) -> Result<crate::algebra::Chirality> {
        Ok(classify_chirality(&self.tensor()?))
    }
}

impl RMatrixDocument {
    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, j, v) in &self.entries {
            m[(i - 1, j - 1)] = v.clone();
        }
        m
    }

    pub fn from_matrix(name: &str, r: &Matrix) -> Self {
        let mut entries = Vec::new();
        for i in 0..r.rows() {
            for j in 0..r.cols() {
                let v = &r[(i, j)];
                if *v != crate::rational::zero() {
                    entries.push((i + 1, j + 1, v.clone()));
                }
            }
        }
        RMatrixDocument {
            name: name.to_string(),
            dim: r.rows(),
            entries,
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "name: {}", self.name);
        }
        let _ = writeln!(out, "dim: {}", self.dim);
        for (i, j, v) in &self.entries {
            let _ = writeln!(out, "r {i} {j} = {}", format_rational(v));
        }
        out
    }
}
