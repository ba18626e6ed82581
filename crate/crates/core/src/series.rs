//! Truncated power series for the Todd function, the L-hat function and the
//! Hirzebruch interpolation between them.
//!
//! Coefficients are exact: [`Rational`] for a fixed `y`, [`YFrac`] when `y`
//! stays symbolic. Nothing is read from tables; every series is built from
//! truncated exponentials by multiplication and inversion.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactmath::{int, Rational, Scalar, YFrac, YPoly};
use crate::weights::WeightParam;

/// `c_0 + c_1 x + .. + c_K x^K`, arithmetic truncated at order `K`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        coeffs.truncate(order + 1);
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(vec![T::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        TruncatedSeries::new(vec![T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        let k = self.order();
        TruncatedSeries::from_fn(k, |n| {
            (0..=n).fold(T::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * other.coeffs[n - i].clone()
            })
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be exactly one.
    pub fn inverse(&self) -> Self {
        assert!(self.coeffs[0] == T::one(), "inverse needs constant term 1");
        let k = self.order();
        let mut out: Vec<T> = Vec::with_capacity(k + 1);
        out.push(T::one());
        for n in 1..=k {
            let s = (1..=n).fold(T::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * out[n - i].clone()
            });
            out.push(-s);
        }
        TruncatedSeries { coeffs: out }
    }

    /// The series of `f(c x)`.
    pub fn rescale_x(&self, c: &T) -> Self {
        let mut pow = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a.clone() * pow.clone();
                pow = pow.clone() * c.clone();
                out
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Drops the constant term (which must vanish) and divides by `x`; the
    /// order decreases by one.
    pub fn div_x(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "series not divisible by x");
        TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl<T: fmt::Display> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// `e^{c x}` with rational coefficients `c^k / k!`.
pub fn exp_series<T: Scalar>(c: &T, order: usize) -> TruncatedSeries<T> {
    TruncatedSeries::from_fn(order, |k| T::from_rational(Rational::one() / factorial(k)))
        .rescale_x(c)
}

/// `x / (1 - e^{-x})`.
pub fn todd_series(order: usize) -> TruncatedSeries<Rational> {
    todd_generic(order)
}

fn todd_generic<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    // (1 - e^{-x}) / x, computed one order higher before dividing by x
    let one_minus = TruncatedSeries::one(order + 1).sub(&exp_series(&-T::one(), order + 1));
    one_minus.div_x().inverse()
}

/// `(x/2) / tanh(x/2)`, computed as `cosh(x/2) / (sinh(x/2) / (x/2))`.
pub fn lhat_series(order: usize) -> TruncatedSeries<Rational> {
    let half = Rational::new(1.into(), 2.into());
    let cosh = TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::one() / factorial(k)
        } else {
            Rational::zero()
        }
    });
    let sinh_over = TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::one() / factorial(k + 1)
        } else {
            Rational::zero()
        }
    });
    cosh.mul(&sinh_over.inverse()).rescale_x(&half)
}

/// The Hirzebruch series `Q(y, x) = x(1+y)/(1 - e^{-x(1+y)}) - y x` with `y`
/// symbolic.
pub fn hirzebruch_series(order: usize) -> TruncatedSeries<YFrac> {
    let opy = YFrac::from_poly(YPoly::one_plus_y());
    let y = YFrac::from_poly(YPoly::y());
    todd_generic::<YFrac>(order)
        .rescale_x(&opy)
        .sub(&TruncatedSeries::x(order).scale(&y))
}

/// `Q_y(x) = Q(y, x/(1+y)) = Todd(x) - (y/(1+y)) x` for a fixed `y != -1`.
pub fn qy_series(y: &WeightParam, order: usize) -> TruncatedSeries<Rational> {
    use crate::weights::WeightModel;
    todd_series(order).sub(&TruncatedSeries::x(order).scale(&y.flipped()))
}

/// `Q_y(x)` with `y` symbolic; coefficients have denominators that are
/// powers of `1 + y`.
pub fn qy_series_symbolic(order: usize) -> TruncatedSeries<YFrac> {
    hirzebruch_series(order).rescale_x(&YFrac::inv_one_plus_y())
}

fn eval_series(s: &TruncatedSeries<YFrac>, y: &Rational) -> TruncatedSeries<Rational> {
    s.map(|c| c.eval(y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} (order {})",
                if c.holds { "ok" } else { "FAIL" },
                c.name,
                self.order
            )?;
        }
        Ok(())
    }
}

/// Checks the classical relations between the three series coefficientwise
/// up to `order`.
pub fn verify_identities(order: usize) -> Result<IdentityReport> {
    let k = order;
    let todd = todd_series(k);
    let lhat = lhat_series(k);
    let neg_one = -Rational::one();
    let todd_neg = todd.rescale_x(&neg_one);
    let exp_neg = exp_series(&neg_one, k);
    let half = Rational::new(1.into(), 2.into());

    let mut checks = Vec::new();
    let mut push = |name: &'static str, holds: bool| checks.push(IdentityCheck { name, holds });

    let defining = {
        let d = TruncatedSeries::one(k + 1)
            .sub(&exp_series(&neg_one, k + 1))
            .div_x();
        todd.mul(&d) == TruncatedSeries::one(k)
    };
    push("Todd(x) (1 - e^-x) / x = 1", defining);
    push("Todd(-x) = e^-x Todd(x)", todd_neg == exp_neg.mul(&todd));
    push(
        "(Todd(x) + Todd(-x)) / 2 = (x/2) / tanh(x/2)",
        todd.add(&todd_neg).scale(&half) == lhat,
    );
    push(
        "(x/2)/tanh(x/2) is even",
        lhat.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero()),
    );

    // symbolic y
    let q = hirzebruch_series(k);
    let opy = YFrac::from_poly(YPoly::one_plus_y());
    let y = YFrac::from_poly(YPoly::y());
    let inv = YFrac::inv_one_plus_y();
    let y_over = YFrac::y_over_one_plus_y();
    let todd_y: TruncatedSeries<YFrac> = todd.map(|c| YFrac::from_rational(c.clone()));
    let exp_neg_y: TruncatedSeries<YFrac> = exp_neg.map(|c| YFrac::from_rational(c.clone()));

    let second_form = {
        // x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)})
        let e = exp_series(&-opy.clone(), k + 1);
        let d = TruncatedSeries::one(k + 1).sub(&e).div_x().scale(&inv);
        let numer = TruncatedSeries::one(k).add(&exp_series(&-opy.clone(), k).scale(&y));
        numer.mul(&d.inverse()).scale(&inv)
    };
    push("Q(y,x) = x(1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)})", q == second_form);
    let todd_scaled = todd_y.rescale_x(&opy);
    let todd_scaled_neg = todd_y.rescale_x(&-opy.clone());
    push(
        "Q(y,x) = Todd(x(1+y))/(1+y) + y Todd(-x(1+y))/(1+y)",
        q == todd_scaled.scale(&inv).add(&todd_scaled_neg.scale(&y_over)),
    );
    push("Q(0,x) = Todd(x)", eval_series(&q, &Rational::zero()) == todd);
    push(
        "Q(1,x/2) = (x/2)/tanh(x/2)",
        eval_series(&q, &Rational::one()).rescale_x(&half) == lhat,
    );

    let qy = qy_series_symbolic(k);
    push(
        "Q_y(x) = Todd(x)(1 + y e^-x)/(1+y)",
        qy == todd_y
            .mul(&TruncatedSeries::one(k).add(&exp_neg_y.scale(&y)))
            .scale(&inv),
    );
    push(
        "Q_y(x) = Todd(x)/(1+y) + y Todd(-x)/(1+y)",
        qy == todd_y
            .scale(&inv)
            .add(&todd_neg.map(|c| YFrac::from_rational(c.clone())).scale(&y_over)),
    );
    push("Q_0(x) = Todd(x)", qy_series(&WeightParam::new(Rational::zero())?, k) == todd);
    push("Q_1(x) = (x/2)/tanh(x/2)", qy_series(&WeightParam::new(Rational::one())?, k) == lhat);
    let samples = [int(0), int(1), int(2), Rational::new((-1).into(), 2.into()), Rational::new(5.into(), 3.into())];
    let mut agree = true;
    for s in &samples {
        agree &= eval_series(&qy, s) == qy_series(&WeightParam::new(s.clone())?, k);
    }
    push("symbolic Q_y agrees with evaluated Q_y", agree);

    Ok(IdentityReport { order, checks })
}
