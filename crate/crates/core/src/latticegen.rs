//! Weighted lattice-point generating functions of regular integral
//! polytopes.
//!
//! The weighted lattice polynomial `sum_p (1/(1+y))^c(p) z^p` is computed
//! three ways: by direct enumeration, as a sum of per-vertex rational
//! functions `z^v prod_j (1 + y z^a_j) / ((1+y)(1 - z^a_j))`, and as the
//! signed sum of truncated polarized cone series.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    determinant, fmt_vector, int, to_exponents, Exponent, LaurentPoly, Rational, RationalFunction,
    YFrac, YPoly,
};
use crate::polarize::{polarize_cones, PolarizingVector};
use crate::polytope::Polytope;
use crate::weights::{cone_sum, WeightModel};

/// Inclusive integer box `lo <= q <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl LatticeBox {
    pub fn around(p: &Polytope) -> Self {
        let (lo, hi) = p.bounding_box();
        LatticeBox { lo, hi }
    }

    pub fn inflate(&self, k: i64) -> Self {
        LatticeBox {
            lo: self.lo.iter().map(|x| x - k).collect(),
            hi: self.hi.iter().map(|x| x + k).collect(),
        }
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for (&l, &h) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (l..=h).map(move |c| {
                        let mut q = prefix.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

pub fn to_rational(q: &[i64]) -> Vec<Rational> {
    q.iter().map(|&c| int(c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub point: Vec<i64>,
    /// Codimension of the smallest face containing the point.
    pub codim: usize,
}

/// Lattice points of `p` with their face codimensions, lexicographically.
pub fn lattice_points(p: &Polytope) -> Vec<LatticePoint> {
    LatticeBox::around(p)
        .points()
        .into_iter()
        .filter_map(|q| {
            p.face_codim(&to_rational(&q))
                .map(|codim| LatticePoint { point: q, codim })
        })
        .collect()
}

/// `sum_p (1/(1+y))^c(p)` over the lattice points of `p`.
pub fn weighted_count<M: WeightModel>(p: &Polytope, model: &M) -> M::Value {
    lattice_points(p).iter().fold(M::Value::zero(), |acc, lp| {
        let w = (0..lp.codim).fold(M::Value::one(), |w, _| w * model.unflipped());
        acc + w
    })
}

/// Number of lattice points per face codimension; the symbolic weighted
/// count is `sum_c counts[c] / (1+y)^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimCounts(pub Vec<usize>);

impl CodimCounts {
    pub fn of(p: &Polytope) -> Self {
        let mut counts = vec![0; p.dim() + 1];
        for lp in lattice_points(p) {
            counts[lp.codim] += 1;
        }
        CodimCounts(counts)
    }

    pub fn to_yfrac(&self) -> YFrac {
        self.0.iter().enumerate().fold(YFrac::zero(), |acc, (c, &k)| {
            acc + YFrac::new(YPoly::constant(int(k as i64)), c as u32)
        })
    }
}

impl fmt::Display for CodimCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(c, k)| match c {
                0 => k.to_string(),
                1 => format!("{k}/(1+y)"),
                _ => format!("{k}/(1+y)^{c}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Weighted lattice polynomial, stored multiplied through by `(1+y)^n` so
/// the coefficient of `z^p` is `(1+y)^(n - c(p))`.
#[derive(Clone, Debug)]
pub struct WeightedLatticeSum {
    pub dim: usize,
    pub points: Vec<LatticePoint>,
    pub poly: LaurentPoly,
}

impl WeightedLatticeSum {
    pub fn new(p: &Polytope) -> Self {
        let n = p.dim();
        let points = lattice_points(p);
        let opy = YPoly::one_plus_y();
        let poly = LaurentPoly::from_terms(
            n,
            points
                .iter()
                .map(|lp| (lp.point.clone(), opy.pow((n - lp.codim) as u32))),
        );
        WeightedLatticeSum { dim: n, points, poly }
    }

    /// Coefficient of `z^alpha`: `(1/(1+y))^c(alpha)` inside, 0 outside.
    pub fn multiplicity(&self, alpha: &[Exponent]) -> YFrac {
        YFrac::new(self.poly.coeff(alpha), self.dim as u32)
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        let den = LaurentPoly::constant(self.dim, YPoly::one_plus_y().pow(self.dim as u32));
        RationalFunction::new(self.poly.clone(), den).expect("(1+y)^n is nonzero")
    }

    /// `sum_p (1/(1+y))^c(p) z^p` at a concrete point.
    pub fn eval(&self, z: &[Rational], y: &Rational) -> Result<Rational> {
        let base = Rational::one() + y;
        if base.is_zero() {
            return Err(Error::YMinusOne);
        }
        Ok(self.poly.eval(z, y)? / num_traits::pow(base, self.dim))
    }
}

/// Checks the hypotheses of the weighted Brion-type identity: integral
/// vertices and unimodular edge bases.
pub fn require_regular_integral(p: &Polytope) -> Result<()> {
    for v in p.vertices() {
        if !v.point.iter().all(|x| x.is_integer()) {
            return Err(Error::NotIntegral {
                vertex: fmt_vector(&v.point),
            });
        }
    }
    for v in p.vertices() {
        let det = determinant(&v.edges);
        if !det.abs().is_one() {
            return Err(Error::NotRegular {
                vertex: fmt_vector(&v.point),
                det: det.to_string(),
            });
        }
    }
    Ok(())
}

/// Per-vertex rational function `z^v prod_j (1 + y z^a_j) / ((1+y)(1 - z^a_j))`
/// over the unpolarized edge vectors `a_j`.
#[derive(Clone, Debug)]
pub struct ConeGenFun {
    pub vertex: usize,
    pub apex: Vec<Exponent>,
    pub edges: Vec<Vec<Exponent>>,
    pub ratfun: RationalFunction,
}

fn one_plus_y_z(n: usize, e: &[Exponent]) -> LaurentPoly {
    &LaurentPoly::one(n) + &LaurentPoly::monomial(e.to_vec(), YPoly::y())
}

fn one_minus_z(n: usize, e: &[Exponent]) -> LaurentPoly {
    &LaurentPoly::one(n) - &LaurentPoly::monomial(e.to_vec(), YPoly::one())
}

pub fn cone_genfun(p: &Polytope, vertex: usize) -> Result<ConeGenFun> {
    require_regular_integral(p)?;
    let n = p.dim();
    let v = &p.vertices()[vertex];
    let apex = to_exponents(&v.point);
    let edges: Vec<Vec<Exponent>> = v.edges.iter().map(|e| to_exponents(e)).collect();
    let mut numer = LaurentPoly::monomial(apex.clone(), YPoly::one());
    let mut denom = LaurentPoly::constant(n, YPoly::one_plus_y().pow(n as u32));
    for e in &edges {
        numer = &numer * &one_plus_y_z(n, e);
        denom = &denom * &one_minus_z(n, e);
    }
    Ok(ConeGenFun {
        vertex,
        apex,
        edges,
        ratfun: RationalFunction::new(numer, denom)?,
    })
}

#[derive(Clone, Debug)]
pub struct BrionCheck {
    /// Sum of all vertex rational functions over a common denominator.
    pub lhs: RationalFunction,
    pub rhs: WeightedLatticeSum,
    pub equal: bool,
}

fn is_canonical(e: &[Exponent]) -> bool {
    e.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Sums the vertex rational functions and compares with the weighted lattice
/// polynomial by cross-multiplication.
///
/// Each factor `1 - z^a` with `a` lexicographically negative is rewritten as
/// `-z^a (1 - z^-a)`, so the common denominator is `(1+y)^n` times a product
/// over distinct edge directions.
pub fn brion_check(p: &Polytope) -> Result<BrionCheck> {
    require_regular_integral(p)?;
    let n = p.dim();

    let mut terms = Vec::new();
    let mut max_mult: BTreeMap<Vec<Exponent>, usize> = BTreeMap::new();
    for vi in 0..p.vertices().len() {
        let g = cone_genfun(p, vi)?;
        let mut numer = LaurentPoly::monomial(g.apex.clone(), YPoly::one());
        let mut mult: BTreeMap<Vec<Exponent>, usize> = BTreeMap::new();
        for e in &g.edges {
            numer = &numer * &one_plus_y_z(n, e);
            if is_canonical(e) {
                *mult.entry(e.clone()).or_default() += 1;
            } else {
                let flipped: Vec<Exponent> = e.iter().map(|x| -x).collect();
                numer = numer.shift(&flipped).scale(&YPoly::constant(-Rational::one()));
                *mult.entry(flipped).or_default() += 1;
            }
        }
        for (d, &k) in &mult {
            let m = max_mult.entry(d.clone()).or_default();
            *m = (*m).max(k);
        }
        terms.push((numer, mult));
    }

    let mut total = LaurentPoly::zero(n);
    for (numer, mult) in terms {
        let mut lifted = numer;
        for (d, &k) in &max_mult {
            for _ in mult.get(d).copied().unwrap_or(0)..k {
                lifted = &lifted * &one_minus_z(n, d);
            }
        }
        total = &total + &lifted;
    }
    let mut denom = LaurentPoly::constant(n, YPoly::one_plus_y().pow(n as u32));
    for (d, &k) in &max_mult {
        for _ in 0..k {
            denom = &denom * &one_minus_z(n, d);
        }
    }
    let lhs = RationalFunction::new(total, denom)?;
    let rhs = WeightedLatticeSum::new(p);
    let equal = lhs.equals(&rhs.as_rational_function());
    Ok(BrionCheck { lhs, rhs, equal })
}

/// Signed polarized cone series truncated to `region`: for every lattice
/// point `q` in the box, `sum_v (-1)^#v w_v(q)`.
pub fn cone_series_sum<M: WeightModel>(
    p: &Polytope,
    xi: &PolarizingVector,
    region: &LatticeBox,
    model: &M,
) -> Result<BTreeMap<Vec<i64>, M::Value>> {
    require_regular_integral(p)?;
    let cones = polarize_cones(p, xi)?;
    Ok(region
        .points()
        .into_iter()
        .map(|q| {
            let w = cone_sum(&cones, &to_rational(&q), model);
            (q, w)
        })
        .collect())
}

/// Brute-force weighted indicator on a box: `(1/(1+y))^c(q)` inside the
/// polytope, 0 outside.
pub fn weighted_indicator<M: WeightModel>(
    p: &Polytope,
    region: &LatticeBox,
    model: &M,
) -> BTreeMap<Vec<i64>, M::Value> {
    region
        .points()
        .into_iter()
        .map(|q| {
            let w = match p.face_codim(&to_rational(&q)) {
                Some(c) => (0..c).fold(M::Value::one(), |w, _| w * model.unflipped()),
                None => M::Value::zero(),
            };
            (q, w)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiCheck {
    /// Sum of vertex contributions.
    pub lhs: Rational,
    /// Weighted lattice polynomial.
    pub rhs: Rational,
    pub equal: bool,
}

impl fmt::Display for ChiCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lhs {} rhs {} {}",
            self.lhs,
            self.rhs,
            if self.equal { "EQUAL" } else { "DIFFER" }
        )
    }
}

/// Evaluates both sides of the chi_y identity at `(y, z)`.
pub fn chi_y_eval(p: &Polytope, y: &Rational, z: &[Rational]) -> Result<ChiCheck> {
    if y == &-Rational::one() {
        return Err(Error::YMinusOne);
    }
    require_regular_integral(p)?;
    if z.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: z.len(),
        });
    }
    if let Some(i) = z.iter().position(|c| c.is_zero()) {
        return Err(Error::ZeroCoordinate { index: i + 1 });
    }
    let mono = |e: &[Exponent]| -> Rational {
        LaurentPoly::monomial(e.to_vec(), YPoly::one())
            .eval(z, y)
            .expect("nonzero coordinates")
    };
    let one = Rational::one();
    let opy = &one + y;
    let mut lhs = Rational::zero();
    for v in p.vertices() {
        let mut term = mono(&to_exponents(&v.point));
        for e in &v.edges {
            let za = mono(&to_exponents(e));
            if za.is_one() {
                return Err(Error::Pole {
                    vertex: fmt_vector(&v.point),
                    edge: fmt_vector(e),
                });
            }
            term *= (&one + y * &za) / (&opy * (&one - &za));
        }
        lhs += term;
    }
    let rhs = WeightedLatticeSum::new(p).eval(z, y)?;
    let equal = lhs == rhs;
    Ok(ChiCheck { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, qvec};
    use crate::polarize::find_polarizing;
    use crate::polytope::{builtin, dilated_simplex, hypercube, interval};
    use crate::weights::{SymbolicY, WeightParam};

    fn counts(p: &Polytope) -> Vec<usize> {
        CodimCounts::of(p).0
    }

    #[test]
    fn lattice_point_examples() {
        let t2 = dilated_simplex(2, int(2)).unwrap();
        let lp = lattice_points(&t2);
        assert_eq!(lp.len(), 6);
        assert_eq!(counts(&t2), vec![0, 3, 3]);
        for (pt, c) in [([0, 0], 2), ([2, 0], 2), ([0, 2], 2), ([1, 0], 1), ([0, 1], 1), ([1, 1], 1)] {
            assert!(lp.contains(&LatticePoint { point: pt.to_vec(), codim: c }));
        }
        assert_eq!(counts(&hypercube(2, int(1)).unwrap()), vec![0, 0, 4]);
        assert_eq!(counts(&dilated_simplex(2, int(4)).unwrap()), vec![3, 9, 3]);
    }

    #[test]
    fn weighted_count_examples() {
        let seg = interval(int(2)).unwrap();
        assert_eq!(CodimCounts::of(&seg).to_string(), "1 + 2/(1+y)");
        let sym = weighted_count(&seg, &SymbolicY);
        assert_eq!(sym, CodimCounts::of(&seg).to_yfrac());
        assert_eq!(weighted_count(&seg, &WeightParam::new(int(0)).unwrap()), int(3));
        assert_eq!(weighted_count(&seg, &WeightParam::new(int(1)).unwrap()), int(2));
        let sq = hypercube(2, int(1)).unwrap();
        assert_eq!(weighted_count(&sq, &WeightParam::new(int(1)).unwrap()), int(1));
    }

    #[test]
    fn interval_genfuns() {
        let seg = interval(int(1)).unwrap();
        let y = YPoly::y();
        let g0 = cone_genfun(&seg, 0).unwrap();
        let expect0 = RationalFunction::new(
            LaurentPoly::from_terms(1, [(vec![0], YPoly::one()), (vec![1], y.clone())]),
            LaurentPoly::from_terms(1, [(vec![0], YPoly::one_plus_y()), (vec![1], -YPoly::one_plus_y())]),
        )
        .unwrap();
        assert!(g0.ratfun.equals(&expect0));
        let g1 = cone_genfun(&seg, 1).unwrap();
        // z (1 + y/z) / ((1+y)(1 - 1/z))
        let expect1 = RationalFunction::new(
            LaurentPoly::from_terms(1, [(vec![1], YPoly::one()), (vec![0], y.clone())]),
            LaurentPoly::from_terms(1, [(vec![0], YPoly::one_plus_y()), (vec![-1], -YPoly::one_plus_y())]),
        )
        .unwrap();
        assert!(g1.ratfun.equals(&expect1));
        // the two sum to (1 + z)/(1 + y)
        let sum = g0.ratfun.add(&g1.ratfun);
        let closed = RationalFunction::new(
            LaurentPoly::from_terms(1, [(vec![0], YPoly::one()), (vec![1], YPoly::one())]),
            LaurentPoly::constant(1, YPoly::one_plus_y()),
        )
        .unwrap();
        assert!(sum.equals(&closed));
    }

    #[test]
    fn square_genfun_at_origin() {
        let sq = hypercube(2, int(1)).unwrap();
        let g = cone_genfun(&sq, 0).unwrap();
        let f = |e: Vec<i64>| one_plus_y_z(2, &e);
        let d = |e: Vec<i64>| one_minus_z(2, &e);
        let expect = RationalFunction::new(
            &f(vec![1, 0]) * &f(vec![0, 1]),
            &(&d(vec![1, 0]) * &d(vec![0, 1])) * &LaurentPoly::constant(2, YPoly::one_plus_y().pow(2)),
        )
        .unwrap();
        assert!(g.ratfun.equals(&expect));
    }

    #[test]
    fn brion_small_cases() {
        for p in [
            interval(int(1)).unwrap(),
            hypercube(2, int(1)).unwrap(),
            dilated_simplex(2, int(1)).unwrap(),
        ] {
            let chk = brion_check(&p).unwrap();
            assert!(chk.equal);
            // independent route: plain pairwise rational-function addition
            let mut acc = RationalFunction::zero(p.dim());
            for v in 0..p.vertices().len() {
                acc = acc.add(&cone_genfun(&p, v).unwrap().ratfun);
            }
            assert!(acc.equals(&chk.rhs.as_rational_function()));
            assert!(acc.equals(&chk.lhs));
        }
    }

    #[test]
    fn hypotheses_enforced() {
        let skinny = builtin("triangle:2,1").unwrap();
        assert!(matches!(brion_check(&skinny), Err(Error::NotRegular { .. })));
        let half = interval(frac(3, 2)).unwrap();
        assert!(matches!(cone_genfun(&half, 0), Err(Error::NotIntegral { .. })));
    }

    #[test]
    fn series_side_matches_indicator() {
        let p = dilated_simplex(2, int(2)).unwrap();
        let region = LatticeBox::around(&p).inflate(3);
        for seed in [1, 5] {
            let xi = find_polarizing(&p, seed);
            let series = cone_series_sum(&p, &xi, &region, &SymbolicY).unwrap();
            assert_eq!(series, weighted_indicator(&p, &region, &SymbolicY));
        }
        let sq = hypercube(2, int(1)).unwrap();
        let xi = find_polarizing(&sq, 2);
        let s = cone_series_sum(&sq, &xi, &LatticeBox::around(&sq), &SymbolicY).unwrap();
        assert_eq!(s[&vec![0, 0]], YFrac::inv_one_plus_y().powi(2));
    }

    #[test]
    fn chi_examples() {
        let seg = interval(int(1)).unwrap();
        let c = chi_y_eval(&seg, &int(3), &[int(2)]).unwrap();
        assert_eq!(c, ChiCheck { lhs: frac(3, 4), rhs: frac(3, 4), equal: true });
        let sq = hypercube(2, int(1)).unwrap();
        let c = chi_y_eval(&sq, &int(1), &qvec(&[2, 3])).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(3), int(3)));
        assert!(matches!(chi_y_eval(&sq, &int(0), &qvec(&[1, 1])), Err(Error::Pole { .. })));
        assert!(matches!(chi_y_eval(&sq, &int(-1), &qvec(&[2, 3])), Err(Error::YMinusOne)));
    }

    #[test]
    fn multiplicities() {
        let t = dilated_simplex(2, int(2)).unwrap();
        let s = WeightedLatticeSum::new(&t);
        assert_eq!(s.multiplicity(&[0, 0]), YFrac::inv_one_plus_y().powi(2));
        assert_eq!(s.multiplicity(&[1, 1]), YFrac::inv_one_plus_y());
        assert_eq!(s.multiplicity(&[3, 0]), YFrac::zero());
    }
}
