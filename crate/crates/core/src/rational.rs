//! Exact rationals. Everything in the crate is built on [`Rational`], an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator.

use num::{BigInt, BigRational, One, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` as a rational. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `-p`, `p/q` (optionally signed, surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(v: &Rational) -> String {
    v.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational(" -2/4 "), Some(frac(-1, 2)));
        assert_eq!(parse_rational("6/-3"), Some(int(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn lowest_terms() {
        let v = frac(10, -4);
        assert_eq!(format_rational(&v), "-5/2");
        assert_eq!(format_rational(&int(7)), "7");
    }
}
