use std::fmt;

use num_traits::{One, Zero};

use super::{LaurentPoly, Rational, YPoly};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials over `Q[y]`.
///
/// No canonical form is maintained: equality is decided by
/// cross-multiplication ([`RationalFunction::equals`]).
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numer: LaurentPoly,
    denom: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numer: LaurentPoly, denom: LaurentPoly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(numer.nvars(), denom.nvars(), "numerator and denominator rings differ");
        Ok(RationalFunction { numer, denom })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RationalFunction {
            numer: p,
            denom: LaurentPoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        RationalFunction::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.denom
    }

    pub fn nvars(&self) -> usize {
        self.numer.nvars()
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let numer = &(&self.numer * &other.denom) + &(&other.numer * &self.denom);
        let denom = &self.denom * &other.denom;
        RationalFunction { numer, denom }.normalize()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numer: &self.numer * &other.numer,
            denom: &self.denom * &other.denom,
        }
        .normalize()
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    /// Cancels the common monomial factor, common powers of `1 + y` in every
    /// coefficient, and rational content. A full multivariate gcd is not
    /// attempted.
    pub fn normalize(self) -> RationalFunction {
        let RationalFunction { mut numer, mut denom } = self;
        let n = numer.nvars();
        if numer.is_zero() {
            return RationalFunction::zero(n);
        }

        let lo_n = numer.min_exponents().unwrap();
        let lo_d = denom.min_exponents().unwrap();
        let common: Vec<i64> = lo_n.iter().zip(&lo_d).map(|(a, b)| -(*a.min(b))).collect();
        // shift so the smaller of the two minima sits at zero
        numer = numer.shift(&common);
        denom = denom.shift(&common);

        loop {
            let divide = |p: &LaurentPoly| -> Option<LaurentPoly> {
                let mut out = LaurentPoly::zero(n);
                for (e, c) in p.terms() {
                    out.add_term(e.clone(), c.div_one_plus_y()?);
                }
                Some(out)
            };
            match (divide(&numer), divide(&denom)) {
                (Some(a), Some(b)) => {
                    numer = a;
                    denom = b;
                }
                _ => break,
            }
        }

        let lead = denom
            .terms()
            .next()
            .and_then(|(_, c)| c.coeffs().last().cloned())
            .expect("nonzero denominator");
        if !lead.is_one() {
            let inv = YPoly::constant(Rational::one() / lead);
            numer = numer.scale(&inv);
            denom = denom.scale(&inv);
        }
        RationalFunction { numer, denom }
    }

    /// Exact equality as rational functions: `a/b == c/d` iff `a d == c b`.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }

    /// Whether this function equals the Laurent polynomial `p`.
    pub fn equals_poly(&self, p: &LaurentPoly) -> bool {
        self.numer == p * &self.denom
    }

    /// Evaluates at a point; `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[Rational], y: &Rational) -> Result<Option<Rational>> {
        let d = self.denom.eval(point, y)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.numer.eval(point, y)? / d))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.numer, self.denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, int};

    fn c(k: i64) -> YPoly {
        YPoly::constant(int(k))
    }

    fn one_minus(e: i64) -> LaurentPoly {
        LaurentPoly::from_terms(1, [(vec![0], c(1)), (vec![e], c(-1))])
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RationalFunction::new(LaurentPoly::one(1), LaurentPoly::zero(1)),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn additive_identity() {
        let f = RationalFunction::new(LaurentPoly::one(1), one_minus(1)).unwrap();
        assert!(f.add(&RationalFunction::zero(1)).equals(&f));
    }

    #[test]
    fn telescoping() {
        let f = RationalFunction::new(LaurentPoly::one(1), one_minus(1)).unwrap();
        let g = RationalFunction::new(LaurentPoly::monomial(vec![1], c(-1)), one_minus(1)).unwrap();
        let s = f.add(&g);
        assert!(s.equals_poly(&LaurentPoly::one(1)));
        assert_eq!(s.eval(&[int(5)], &int(0)).unwrap(), Some(int(1)));
    }

    #[test]
    fn one_dimensional_point_identity() {
        // 1/(1-z) + 1/(1-1/z) = 1
        let f = RationalFunction::new(LaurentPoly::one(1), one_minus(1)).unwrap();
        let g = RationalFunction::new(LaurentPoly::one(1), one_minus(-1)).unwrap();
        let s = f.add(&g);
        assert!(s.equals_poly(&LaurentPoly::one(1)));
        for z in [int(2), frac(-1, 3), frac(7, 5)] {
            assert_eq!(s.eval(&[z], &int(0)).unwrap(), Some(int(1)));
        }
    }

    #[test]
    fn normalize_cancels_monomials_and_one_plus_y() {
        let opy = YPoly::one_plus_y();
        let f = RationalFunction::new(
            LaurentPoly::monomial(vec![3], opy.pow(2)),
            LaurentPoly::monomial(vec![1], opy.scale(&int(2))),
        )
        .unwrap()
        .normalize();
        assert_eq!(f.denom(), &LaurentPoly::one(1));
        assert_eq!(f.numer(), &LaurentPoly::monomial(vec![2], opy.scale(&frac(1, 2))));
    }
}
