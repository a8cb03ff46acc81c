//! Independent reference computations for the integration tests. Everything
//! here works on vectors through the bracket, never on the library's index
//! contractions.
#![allow(dead_code)]

use std::sync::OnceLock;

use leibniz_bialgebra::actions::ActionCase;
use leibniz_bialgebra::rational::{one, zero};
use leibniz_bialgebra::rmatrix::CoboundaryCase;
use leibniz_bialgebra::sampling::Sampler;
use leibniz_bialgebra::{LeibnizAlgebra, Matrix, Rational, Side, StructureTensor};

pub type Q = Rational;

pub fn e(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|k| if k == i { one() } else { zero() }).collect()
}

pub fn br(f: &StructureTensor, x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = f.dim();
    let mut out = vec![zero(); n];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            let c = xi * yj;
            if c == zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &c * f.get(i, j, k);
            }
        }
    }
    out
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Right: `[[x,y],z] = [[x,z],y] + [x,[y,z]]`; left: `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
pub fn leibniz_holds(f: &StructureTensor, side: Side) -> bool {
    let n = f.dim();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (e(n, a), e(n, b), e(n, c));
                let (lhs, r1, r2) = match side {
                    Side::Right => (br(f, &br(f, &x, &y), &z), br(f, &br(f, &x, &z), &y), br(f, &x, &br(f, &y, &z))),
                    Side::Left => (br(f, &x, &br(f, &y, &z)), br(f, &br(f, &x, &y), &z), br(f, &y, &br(f, &x, &z))),
                };
                if sub(&sub(&lhs, &r1), &r2).iter().any(|v| *v != zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Applies a linear map to one tensor factor of `u = sum u[a][b] X_a (x) X_b`.
fn on_factor(u: &Matrix, first: bool, op: &dyn Fn(&[Q]) -> Vec<Q>) -> Matrix {
    let n = u.rows();
    let mut out = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let c = u[(a, b)].clone();
            if c == zero() {
                continue;
            }
            let img = op(&e(n, if first { a } else { b }));
            for (s, v) in img.iter().enumerate() {
                if first {
                    out[(s, b)] += &c * v;
                } else {
                    out[(a, s)] += &c * v;
                }
            }
        }
    }
    out
}

fn ad_l<'a>(f: &'a StructureTensor, x: Vec<Q>) -> impl Fn(&[Q]) -> Vec<Q> + 'a {
    move |z| br(f, &x, z)
}

fn ad_r<'a>(f: &'a StructureTensor, x: Vec<Q>) -> impl Fn(&[Q]) -> Vec<Q> + 'a {
    move |z| br(f, z, &x)
}

/// `gamma(X_k) = sum ft[i][j][k] X_i (x) X_j`, extended linearly.
fn gamma(ft: &StructureTensor, x: &[Q]) -> Matrix {
    let n = ft.dim();
    Matrix::from_fn(n, n, |i, j| (0..n).map(|k| &x[k] * ft.get(i, j, k)).sum())
}

/// The 1-cocycle condition written with the actions of the given case.
pub fn cocycle_holds(f: &StructureTensor, ft: &StructureTensor, case: ActionCase) -> bool {
    let n = f.dim();
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (e(n, a), e(n, b));
            let lhs = gamma(ft, &br(f, &x, &y));
            let (gx, gy) = (gamma(ft, &x), gamma(ft, &y));
            let rhs = match case {
                ActionCase::Case1 => &on_factor(&gy, true, &ad_l(f, x.clone())) + &on_factor(&gx, true, &ad_r(f, y.clone())),
                ActionCase::Case2 => &on_factor(&gx, false, &ad_r(f, y.clone())) + &on_factor(&gx, true, &ad_r(f, y.clone())),
                ActionCase::Case3 => &on_factor(&gy, false, &ad_l(f, x.clone())) + &on_factor(&gy, true, &ad_l(f, x.clone())),
                ActionCase::Case4 => &on_factor(&gy, false, &ad_l(f, x.clone())) + &on_factor(&gx, false, &ad_r(f, y.clone())),
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The coboundary of `r`: `X -> [X, r]_L` on right algebras, `-[r, X]_R` on
/// left ones, with the case-1 or case-4 actions.
pub fn coboundary_dual(f: &StructureTensor, r: &Matrix, case: CoboundaryCase) -> StructureTensor {
    let n = f.dim();
    let mut ft = StructureTensor::zero(n).unwrap();
    for k in 0..n {
        let x = e(n, k);
        let g = match case {
            CoboundaryCase::Right1 => on_factor(r, true, &ad_l(f, x)),
            CoboundaryCase::Left1 => -&on_factor(r, true, &ad_r(f, x)),
            CoboundaryCase::Right4 => on_factor(r, false, &ad_l(f, x)),
            CoboundaryCase::Left4 => -&on_factor(r, false, &ad_r(f, x)),
            CoboundaryCase::TrivialOnly => Matrix::zeros(n, n),
        };
        for i in 0..n {
            for j in 0..n {
                ft.set(i, j, k, g[(i, j)].clone());
            }
        }
    }
    ft
}

/// `r(e^m) = r^{mi} X_i`, `r^t(e^n) = r^{in} X_i`.
fn r_under(r: &Matrix, m: usize) -> Vec<Q> {
    r.row(m).to_vec()
}

fn r_t(r: &Matrix, n: usize) -> Vec<Q> {
    (0..r.rows()).map(|i| r[(i, n)].clone()).collect()
}

/// `[[r,r]](e^m, e^n, e^p)` from the pairing formulas. Right:
/// `<e^m,[r^t e^n, r^t e^p]> + <e^n,[r e^m, r^t e^p]>`; left:
/// `-<e^n,[r e^m, r^t e^p]> - <e^p,[r e^m, r e^n]>`.
pub fn schouten_pairing(f: &StructureTensor, r: &Matrix, side: Side) -> Vec<Q> {
    let n = f.dim();
    let mut out = Vec::with_capacity(n * n * n);
    for m in 0..n {
        for nn in 0..n {
            for p in 0..n {
                let v = match side {
                    Side::Right => br(f, &r_t(r, nn), &r_t(r, p))[m].clone() + br(f, &r_under(r, m), &r_t(r, p))[nn].clone(),
                    Side::Left => -(br(f, &r_under(r, m), &r_t(r, p))[nn].clone()) - br(f, &r_under(r, m), &r_under(r, nn))[p].clone(),
                };
                out.push(v);
            }
        }
    }
    out
}

/// `(chi_i)_{jk} = -[X_i, X_j]_k` and friends, straight from brackets.
pub fn oracle_adjoint(f: &StructureTensor) -> (Vec<Matrix>, Vec<Matrix>, Vec<Matrix>) {
    let n = f.dim();
    let chi = (0..n)
        .map(|i| Matrix::from_fn(n, n, |j, k| -br(f, &e(n, i), &e(n, j))[k].clone()))
        .collect();
    let chi_p = (0..n)
        .map(|m| Matrix::from_fn(n, n, |i, k| -br(f, &e(n, i), &e(n, m))[k].clone()))
        .collect();
    let y = (0..n)
        .map(|k| Matrix::from_fn(n, n, |i, j| -br(f, &e(n, i), &e(n, j))[k].clone()))
        .collect();
    (chi, chi_p, y)
}

fn inverse(p: &Matrix) -> Option<Matrix> {
    let n = p.rows();
    let mut cols = Vec::new();
    for c in 0..n {
        let (x, kernel) = p.solve_affine(&e(n, c))?;
        if !kernel.is_empty() {
            return None;
        }
        cols.push(x);
    }
    Some(Matrix::from_fn(n, n, |i, j| cols[j][i].clone()))
}

/// The same algebra in the basis `Y_i = sum_a P[i][a] X_a`.
pub fn change_basis(alg: &LeibnizAlgebra, p: &Matrix) -> Option<LeibnizAlgebra> {
    let q = inverse(p)?;
    let f = alg.tensor();
    let n = f.dim();
    let mut g = StructureTensor::zero(n).unwrap();
    for i in 0..n {
        for j in 0..n {
            let v = br(f, p.row(i), p.row(j));
            // v in X coordinates; X_c = sum_k Q[c][k] Y_k
            for k in 0..n {
                let c: Q = (0..n).map(|c| &v[c] * &q[(c, k)]).sum();
                g.set(i, j, k, c);
            }
        }
    }
    Some(LeibnizAlgebra::new(format!("{}*", alg.name()), g))
}

/// A random algebra of dimension 2 or 3: a corpus algebra in a random basis.
pub fn random_algebra(s: &mut Sampler) -> LeibnizAlgebra {
    static CORPUS: OnceLock<Vec<LeibnizAlgebra>> = OnceLock::new();
    let corpus = CORPUS.get_or_init(leibniz_bialgebra::corpus::property_corpus);
    let base = &corpus[s.dim(0, corpus.len() - 1)];
    loop {
        let p = s.matrix(base.dim());
        if let Some(alg) = change_basis(base, &p) {
            assert_eq!(alg.chirality(), base.chirality(), "basis change preserves chirality");
            return alg;
        }
    }
}
