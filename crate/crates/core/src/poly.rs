//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};

/// `sum c_e * t^e` over exponent vectors `e`, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The monomial `c * t_a * t_b` (`a == b` gives a square).
    pub fn quadratic(vars: usize, a: usize, b: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(quadratic_exponent(vars, a, b), c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, c: Rational) {
        assert_eq!(exponent.len(), self.vars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Formats with the given variable names, highest-order term first in
    /// lexicographic exponent order.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, name)| if *k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            let negative = c.is_negative();
            let magnitude = c.abs();
            if n == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if monomial.is_empty() {
                out.push_str(&format_rational(&magnitude));
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format_rational(&magnitude));
                    out.push('*');
                }
                out.push_str(&monomial.join("*"));
            }
        }
        out
    }
}

fn quadratic_exponent(vars: usize, a: usize, b: usize) -> Vec<u32> {
    let mut e = vec![0; vars];
    e[a] += 1;
    e[b] += 1;
    e
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.vars).map(|i| format!("t{i}")).collect();
        f.write_str(&self.render(&names))
    }
}
