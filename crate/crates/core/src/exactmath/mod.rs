//! Exact scalars, vectors and polynomial arithmetic.
//!
//! Everything here is exact: rationals are arbitrary precision and never
//! rounded. Polynomials in the lattice variables `z_1..z_n` carry
//! coefficients that are themselves polynomials in the weight parameter `y`.

mod laurent;
mod linalg;
mod ratfun;
mod ypoly;

use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use laurent::{Exponent, LaurentPoly};
pub use linalg::{
    add, determinant, dot, inverse, mat_vec, rank, scale, solve_linear, sub, Matrix,
};
pub use ratfun::RationalFunction;
pub use ypoly::{YFrac, YPoly};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A point or direction in `Q^n`.
pub type QVector = Vec<Rational>;

/// Coefficient types usable in weight sums and truncated power series.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_rational(r: Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(entries: &[i64]) -> QVector {
    entries.iter().map(|&e| int(e)).collect()
}

/// Parses an integer or `p/q` literal. Decimal points, exponents, NaN and
/// infinities are rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return None;
    }
    let num: BigInt = num.trim_start_matches('+').parse().ok()?;
    let den: BigInt = den.trim_start_matches('+').parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Renders a vector as `(a, b, c)` with exact entries.
pub fn fmt_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Renders a rational as a decimal with `digits` fractional digits
/// (rounded half away from zero).
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let abs = rounded.abs();
    let (whole, rest) = abs.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", rest.to_string(), width = digits)
    }
}

/// The unique integer vector `c * v` with `c > 0` whose entries are coprime.
pub fn primitive(v: &[Rational]) -> Result<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Ok(ints.into_iter().map(|x| x / &gcd).collect())
}

/// [`primitive`] lifted back into `Q^n`.
pub fn primitive_q(v: &[Rational]) -> Result<QVector> {
    Ok(primitive(v)?
        .into_iter()
        .map(Rational::from_integer)
        .collect())
}

pub fn is_integer_vector(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Converts an integer-valued rational vector into machine exponents.
///
/// Panics if an entry is not an integer or does not fit in `i64`; callers
/// check integrality first.
pub fn to_exponents(v: &[Rational]) -> Vec<Exponent> {
    use num_traits::ToPrimitive;
    v.iter()
        .map(|x| {
            assert!(x.is_integer(), "non-integer exponent {x}");
            x.to_integer().to_i64().expect("exponent out of range")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&qvec(&[2, 4])).unwrap(), big(&[1, 2]));
        assert_eq!(
            primitive(&[frac(1, 2), frac(-3, 2)]).unwrap(),
            big(&[1, -3])
        );
        assert_eq!(primitive(&qvec(&[0, -5])).unwrap(), big(&[0, -1]));
        assert_eq!(primitive(&qvec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-6/4"), Some(frac(-3, 2)));
        assert_eq!(parse_rational(" +1/3 "), Some(frac(1, 3)));
        for bad in ["1.5", "NaN", "inf", "1e3", "1/0", "", "/", "1/-"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&frac(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&frac(-2, 3), 2), "-0.67");
        assert_eq!(to_decimal(&int(5), 0), "5");
        assert_eq!(to_decimal(&frac(-1, 720), 5), "-0.00139");
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = frac(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let z = frac(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }
}
