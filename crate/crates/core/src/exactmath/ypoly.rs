use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// Univariate polynomial in `y` over `Q`, coefficients stored from degree 0
/// upward with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<Rational>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        YPoly::new(vec![c])
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        YPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// The polynomial `1 + y`.
    pub fn one_plus_y() -> Self {
        YPoly::new(vec![Rational::one(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = YPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        YPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    /// Divides by `1 + y` if it is a factor.
    pub fn div_one_plus_y(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        // synthetic division by (y + 1), i.e. root -1
        let d = self.coeffs.len() - 1;
        let mut q = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (0..=d).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                return v.is_zero().then(|| YPoly::new(q));
            }
            carry = -v.clone();
            q[i - 1] = v;
        }
        unreachable!()
    }
}

impl Zero for YPoly {
    fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for YPoly {
    fn one() -> Self {
        YPoly::constant(Rational::one())
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        YPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        self + &(-rhs)
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPoly::new(out)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(YPoly, Add add, Sub sub, Mul mul);

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}y", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}y^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

/// A rational function of `y` whose denominator is a power of `1 + y`:
/// `numer / (1 + y)^pow`.
///
/// Every weight `(1/(1+y))^a (y/(1+y))^b`, and every sum of such weights,
/// has this form. Values are kept reduced (`numer` not divisible by `1 + y`
/// when `pow > 0`), so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YFrac {
    numer: YPoly,
    pow: u32,
}

impl YFrac {
    pub fn new(numer: YPoly, pow: u32) -> Self {
        let mut out = YFrac { numer, pow };
        out.reduce();
        out
    }

    pub fn from_poly(p: YPoly) -> Self {
        YFrac { numer: p, pow: 0 }
    }

    /// `1 / (1 + y)`.
    pub fn inv_one_plus_y() -> Self {
        YFrac::new(YPoly::one(), 1)
    }

    /// `y / (1 + y)`.
    pub fn y_over_one_plus_y() -> Self {
        YFrac::new(YPoly::y(), 1)
    }

    pub fn numer(&self) -> &YPoly {
        &self.numer
    }

    pub fn pow(&self) -> u32 {
        self.pow
    }

    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.pow = 0;
            return;
        }
        while self.pow > 0 {
            match self.numer.div_one_plus_y() {
                Some(q) => {
                    self.numer = q;
                    self.pow -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator after multiplying through by `(1 + y)^target`.
    ///
    /// Panics if `target < self.pow()`.
    pub fn cleared(&self, target: u32) -> YPoly {
        assert!(target >= self.pow, "cannot clear (1+y)^{} with (1+y)^{target}", self.pow);
        &self.numer * &YPoly::one_plus_y().pow(target - self.pow)
    }

    /// Evaluates at a rational `y != -1`.
    pub fn eval(&self, y: &Rational) -> Rational {
        let base = Rational::one() + y;
        assert!(!base.is_zero() || self.pow == 0, "YFrac evaluated at y = -1");
        let den = num_traits::pow(base, self.pow as usize);
        self.numer.eval(y) / den
    }

    pub fn powi(&self, k: u32) -> Self {
        YFrac::new(self.numer.pow(k), self.pow * k)
    }
}

impl Add for &YFrac {
    type Output = YFrac;
    fn add(self, rhs: &YFrac) -> YFrac {
        let p = self.pow.max(rhs.pow);
        YFrac::new(&self.cleared(p) + &rhs.cleared(p), p)
    }
}

impl Sub for &YFrac {
    type Output = YFrac;
    fn sub(self, rhs: &YFrac) -> YFrac {
        self + &(-rhs)
    }
}

impl Mul for &YFrac {
    type Output = YFrac;
    fn mul(self, rhs: &YFrac) -> YFrac {
        YFrac::new(&self.numer * &rhs.numer, self.pow + rhs.pow)
    }
}

impl Neg for &YFrac {
    type Output = YFrac;
    fn neg(self) -> YFrac {
        YFrac {
            numer: -&self.numer,
            pow: self.pow,
        }
    }
}

forward_owned!(YFrac, Add add, Sub sub, Mul mul);

impl Neg for YFrac {
    type Output = YFrac;
    fn neg(self) -> YFrac {
        -&self
    }
}

impl Zero for YFrac {
    fn zero() -> Self {
        YFrac::from_poly(YPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl One for YFrac {
    fn one() -> Self {
        YFrac::from_poly(YPoly::one())
    }
}

impl Scalar for YFrac {
    fn from_rational(r: Rational) -> Self {
        YFrac::from_poly(YPoly::constant(r))
    }
}

impl fmt::Display for YFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let many_terms = self.numer.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let numer = if many_terms && self.pow > 0 {
            format!("({})", self.numer)
        } else {
            self.numer.to_string()
        };
        match self.pow {
            0 => write!(f, "{numer}"),
            1 => write!(f, "{numer}/(1+y)"),
            k => write!(f, "{numer}/(1+y)^{k}"),
        }
    }
}

impl fmt::Debug for YFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YFrac({self})")
    }
}
