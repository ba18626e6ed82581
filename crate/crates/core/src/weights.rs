//! Weighted characteristic functions of a polytope and of its polarized
//! tangent cones.
//!
//! A point on a face of codimension `c` of the polytope weighs
//! `(1/(1+y))^c`. A point of a polarized cone weighs
//! `(1/(1+y))^r1 (y/(1+y))^r2`, where `r1` (`r2`) counts the unflipped
//! (flipped) generators whose coordinate vanishes at the point. The signed
//! sum of the cone functions reproduces the polytope function for every
//! polarizing vector.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactmath::{dot, frac, int, Rational, Scalar, YFrac, QVector};
use crate::polarize::{polarize_cones, PolarizedCone, PolarizingVector};
use crate::polytope::Polytope;

/// Source of the two elementary weights `1/(1+y)` and `y/(1+y)`.
pub trait WeightModel {
    type Value: Scalar;

    /// `1/(1+y)`, carried by unflipped generators.
    fn unflipped(&self) -> Self::Value;

    /// `y/(1+y)`, carried by flipped generators.
    fn flipped(&self) -> Self::Value;

    fn sign(&self, value: Self::Value, sign: i32) -> Self::Value {
        if sign < 0 {
            -value
        } else {
            value
        }
    }
}

/// A concrete rational `y != -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightParam {
    y: Rational,
}

impl WeightParam {
    pub fn new(y: Rational) -> Result<Self> {
        if y == -Rational::one() {
            return Err(Error::YMinusOne);
        }
        Ok(WeightParam { y })
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }
}

impl WeightModel for WeightParam {
    type Value = Rational;

    fn unflipped(&self) -> Rational {
        Rational::one() / (Rational::one() + &self.y)
    }

    fn flipped(&self) -> Rational {
        &self.y / (Rational::one() + &self.y)
    }
}

/// `y` kept as an indeterminate; values are [`YFrac`]s.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymbolicY;

impl WeightModel for SymbolicY {
    type Value = YFrac;

    fn unflipped(&self) -> YFrac {
        YFrac::inv_one_plus_y()
    }

    fn flipped(&self) -> YFrac {
        YFrac::y_over_one_plus_y()
    }
}

fn power<V: Scalar>(base: V, k: usize) -> V {
    (0..k).fold(V::one(), |acc, _| acc * base.clone())
}

/// Vanishing-coordinate counts of a point inside a polarized cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeWeight {
    pub r1: usize,
    pub r2: usize,
}

impl ConeWeight {
    /// Counts for `x`, or `None` when `x` is outside the cone.
    pub fn at(cone: &PolarizedCone, x: &[Rational]) -> Option<Self> {
        let m = cone.membership(x)?;
        let mut w = ConeWeight { r1: 0, r2: 0 };
        for (mj, &flipped) in m.iter().zip(&cone.flipped) {
            if mj.is_zero() {
                if flipped {
                    w.r2 += 1;
                } else {
                    w.r1 += 1;
                }
            }
        }
        Some(w)
    }

    /// Codimension of the smallest cone face containing the point.
    pub fn codim(&self) -> usize {
        self.r1 + self.r2
    }

    pub fn value<M: WeightModel>(&self, model: &M) -> M::Value {
        power(model.unflipped(), self.r1) * power(model.flipped(), self.r2)
    }
}

/// Weighted characteristic function of a polarized cone.
pub fn cone_weight<M: WeightModel>(cone: &PolarizedCone, x: &[Rational], model: &M) -> M::Value {
    ConeWeight::at(cone, x).map_or_else(M::Value::zero, |w| w.value(model))
}

/// Weighted characteristic function of the polytope.
pub fn polytope_weight<M: WeightModel>(p: &Polytope, x: &[Rational], model: &M) -> M::Value {
    p.face_codim(x)
        .map_or_else(M::Value::zero, |c| power(model.unflipped(), c))
}

/// Signed sum of cone weights, `sum_v (-1)^#v 1^{w_v}(x)`.
pub fn cone_sum<M: WeightModel>(cones: &[PolarizedCone], x: &[Rational], model: &M) -> M::Value {
    cones.iter().fold(M::Value::zero(), |acc, c| {
        acc + model.sign(cone_weight(c, x, model), c.sign())
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionCheck<V> {
    pub lhs: V,
    pub rhs: V,
    pub equal: bool,
}

impl<V: fmt::Display> fmt::Display for DecompositionCheck<V> {
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

/// Compares the polytope weight at `x` with the signed cone sum.
pub fn check_with_cones<M: WeightModel>(
    p: &Polytope,
    cones: &[PolarizedCone],
    x: &[Rational],
    model: &M,
) -> DecompositionCheck<M::Value> {
    let lhs = polytope_weight(p, x, model);
    let rhs = cone_sum(cones, x, model);
    let equal = lhs == rhs;
    DecompositionCheck { lhs, rhs, equal }
}

pub fn check_decomposition<M: WeightModel>(
    p: &Polytope,
    xi: &PolarizingVector,
    x: &[Rational],
    model: &M,
) -> Result<DecompositionCheck<M::Value>> {
    let cones = polarize_cones(p, xi)?;
    Ok(check_with_cones(p, &cones, x, model))
}

/// Probe points for pointwise identity checks: the barycenter of every face,
/// points a short step beyond each vertex along `+xi` and `-xi`, and
/// `random` rational points in the bounding box inflated to twice its size.
pub fn sample_points<R: Rng>(p: &Polytope, xi: &PolarizingVector, random: usize, rng: &mut R) -> Vec<QVector> {
    let mut out: Vec<QVector> = p.faces().into_iter().map(|f| f.barycenter).collect();

    let norm1: Rational = xi.xi().iter().map(|x| if x < &Rational::zero() { -x } else { x.clone() }).sum();
    for step in [frac(1, 2), int(1)] {
        let t = step / &norm1;
        for v in p.vertices() {
            for sign in [1, -1] {
                let s = &t * int(sign);
                out.push(v.point.iter().zip(xi.xi()).map(|(a, b)| a + &s * b).collect());
            }
        }
    }

    let (lo, hi) = p.bounding_box();
    for _ in 0..random {
        let x = lo
            .iter()
            .zip(&hi)
            .map(|(&l, &h)| {
                let half = (h - l).max(1);
                let den = rng.gen_range(1..=6i64);
                let num = rng.gen_range((2 * l - half) * den..=(2 * h + half) * den);
                // center the inflated box on the original one
                frac(num, 2 * den)
            })
            .collect();
        out.push(x);
    }
    out
}

/// A pair of polarizing vectors separated by exactly one wall, the
/// hyperplane orthogonal to `direction`.
#[derive(Clone, Debug)]
pub struct WallCrossing {
    pub direction: QVector,
    /// `<before, direction> < 0`.
    pub before: PolarizingVector,
    /// `<after, direction> > 0`.
    pub after: PolarizingVector,
}

impl WallCrossing {
    /// Crosses the wall orthogonal to `direction` (an edge direction of `p`)
    /// at a generic point of the wall drawn from `rng`.
    pub fn engineer<R: Rng>(p: &Polytope, direction: &[Rational], rng: &mut R) -> Result<Self> {
        let others: Vec<QVector> = p
            .edge_directions()
            .into_iter()
            .filter(|d| !parallel(d, direction))
            .collect();
        let aa = dot(direction, direction);
        let on_wall = loop {
            let r: QVector = (0..p.dim()).map(|_| int(rng.gen_range(-9..=9))).collect();
            let ra = dot(&r, direction);
            let q: QVector = r
                .iter()
                .zip(direction)
                .map(|(ri, ai)| ri * &aa - &ra * ai)
                .collect();
            if q.iter().any(|x| !x.is_zero()) && others.iter().all(|d| !dot(&q, d).is_zero()) {
                break q;
            }
        };
        // stay strictly closer to the wall than any other wall along the path
        let mut eps = int(1);
        for d in &others {
            let ad = dot(direction, d);
            if !ad.is_zero() {
                let t = dot(&on_wall, d) / ad;
                let t = if t < Rational::zero() { -t } else { t };
                if t < &eps * int(2) {
                    eps = t / int(2);
                }
            }
        }
        let shift = |s: &Rational| -> QVector {
            on_wall.iter().zip(direction).map(|(q, a)| q + s * a).collect()
        };
        Ok(WallCrossing {
            direction: direction.to_vec(),
            before: PolarizingVector::new(p, shift(&-eps.clone()))?,
            after: PolarizingVector::new(p, shift(&eps))?,
        })
    }
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    let n = a.len();
    (0..n).all(|i| (0..n).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// How the probe point sits relative to a crossing edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingCase {
    /// The point lies in neither cone at either endpoint.
    Untouched,
    /// The smallest face through the point contains the edge.
    EdgeInFace,
    /// The edge leaves the smallest face through the point.
    EdgeOffFace,
}

/// Contributions of the two endpoints of one edge perpendicular to the
/// crossed wall, before (`s_*`) and after (`s_*_after`) the crossing.
#[derive(Clone, Debug)]
pub struct EdgeCrossing<V> {
    /// Endpoint whose edge vector along the edge goes from unflipped to flipped.
    pub v: usize,
    pub u: usize,
    pub case: CrossingCase,
    pub s_v: V,
    pub s_v_after: V,
    pub s_u: V,
    pub s_u_after: V,
}

impl<V: Scalar> EdgeCrossing<V> {
    /// `(S_v - S'_v) + (S_u - S'_u)`, which must vanish.
    pub fn imbalance(&self) -> V {
        (self.s_v.clone() - self.s_v_after.clone()) + (self.s_u.clone() - self.s_u_after.clone())
    }
}

/// Per-edge wall-crossing contributions at `x`, plus the contribution
/// changes of all vertices not on a crossing edge (which must be zero).
pub fn crossing_contributions<M: WeightModel>(
    p: &Polytope,
    crossing: &WallCrossing,
    x: &[Rational],
    model: &M,
) -> Result<(Vec<EdgeCrossing<M::Value>>, Vec<M::Value>)> {
    let before = polarize_cones(p, &crossing.before)?;
    let after = polarize_cones(p, &crossing.after)?;
    let signed = |c: &PolarizedCone| model.sign(cone_weight(c, x, model), c.sign());

    let mut on_edge = vec![false; p.vertices().len()];
    let mut pairs = Vec::new();
    for (i, v) in p.vertices().iter().enumerate() {
        for (j, e) in v.edges.iter().enumerate() {
            if e.as_slice() != crossing.direction.as_slice() {
                continue;
            }
            let u = v.neighbors[j];
            on_edge[i] = true;
            on_edge[u] = true;
            let m = before[i].coordinates(x);
            let inside_rest = m
                .iter()
                .enumerate()
                .all(|(k, c)| k == j || c >= &Rational::zero());
            let case = if !inside_rest {
                CrossingCase::Untouched
            } else if m[j].is_zero() {
                CrossingCase::EdgeOffFace
            } else {
                CrossingCase::EdgeInFace
            };
            pairs.push(EdgeCrossing {
                v: i,
                u,
                case,
                s_v: signed(&before[i]),
                s_v_after: signed(&after[i]),
                s_u: signed(&before[u]),
                s_u_after: signed(&after[u]),
            });
        }
    }
    let unchanged = (0..p.vertices().len())
        .filter(|&i| !on_edge[i])
        .map(|i| signed(&before[i]) - signed(&after[i]))
        .collect();
    Ok((pairs, unchanged))
}
