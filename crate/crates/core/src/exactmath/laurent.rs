use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, YPoly};
use crate::error::{Error, Result};

pub type Exponent = i64;

/// Sparse Laurent polynomial in `z_1..z_n` with coefficients in `Q[y]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<Exponent>, YPoly>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: YPoly) -> Self {
        LaurentPoly::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, YPoly::one())
    }

    pub fn monomial(exponents: Vec<Exponent>, c: YPoly) -> Self {
        let mut p = LaurentPoly::zero(exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing repeated keys.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<Exponent>, YPoly)>) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Exponent>, &YPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[Exponent]) -> YPoly {
        self.terms.get(exponents).cloned().unwrap_or_else(YPoly::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<Exponent>, c: YPoly) {
        assert_eq!(exponents.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&exponents);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    /// Multiplies every coefficient by a polynomial in `y`.
    pub fn scale(&self, c: &YPoly) -> Self {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(e, k)| (e.clone(), k * c)))
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[Exponent]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms (the largest monomial
    /// dividing the polynomial in the Laurent sense).
    pub fn min_exponents(&self) -> Option<Vec<Exponent>> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()))
    }

    /// Substitutes `z_i := point[i]` and the rational `y`.
    pub fn eval(&self, point: &[Rational], y: &Rational) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.eval(y);
            for (i, (&k, z)) in e.iter().zip(point).enumerate() {
                if k < 0 && z.is_zero() {
                    return Err(Error::ZeroCoordinate { index: i + 1 });
                }
                term *= rational_powi(z, k);
            }
            total += term;
        }
        Ok(total)
    }

    fn check_vars(&self, other: &LaurentPoly) {
        assert_eq!(self.nvars, other.nvars, "Laurent polynomials in different rings");
    }
}

pub(crate) fn rational_powi(z: &Rational, k: Exponent) -> Rational {
    if k >= 0 {
        num_traits::pow(z.clone(), k as usize)
    } else {
        num_traits::pow(Rational::one() / z, (-k) as usize)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("z{}", i + 1)
                        } else {
                            format!("z{}^{k}", i + 1)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, int};

    fn c(k: i64) -> YPoly {
        YPoly::constant(int(k))
    }

    #[test]
    fn eval_with_negative_exponent() {
        let p = LaurentPoly::from_terms(1, [(vec![1], c(1)), (vec![-1], c(1))]);
        assert_eq!(p.eval(&[int(2)], &int(0)).unwrap(), frac(5, 2));
        assert_eq!(
            p.eval(&[int(0)], &int(0)),
            Err(Error::ZeroCoordinate { index: 1 })
        );
    }

    #[test]
    fn hand_expansion() {
        // (1 + y z)(1 - z) = 1 + (y - 1) z - y z^2
        let a = LaurentPoly::from_terms(1, [(vec![0], c(1)), (vec![1], YPoly::y())]);
        let b = LaurentPoly::from_terms(1, [(vec![0], c(1)), (vec![1], c(-1))]);
        let expected = LaurentPoly::from_terms(
            1,
            [
                (vec![0], c(1)),
                (vec![1], &YPoly::y() - &c(1)),
                (vec![2], -YPoly::y()),
            ],
        );
        assert_eq!(&a * &b, expected);
        assert_eq!(&a + &LaurentPoly::zero(1), a);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly::monomial(vec![1, 2], c(3));
        assert!((&a - &a).is_zero());
        assert_eq!(a.min_exponents(), Some(vec![1, 2]));
    }
}
