//! Polarizing vectors and polarized tangent cones.
//!
//! At each vertex an edge vector `a` is kept when `<a, xi> < 0` and flipped
//! to `-a` when `<a, xi> > 0`; the cone then carries the sign
//! `(-1)^(number of flips)`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{dot, fmt_vector, int, inverse, mat_vec, sub, Matrix, QVector, Rational};
use crate::polytope::Polytope;

/// A vector with nonzero pairing against every edge vector of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizingVector {
    xi: QVector,
}

impl PolarizingVector {
    /// Validates `xi` against every edge vector of `p`.
    pub fn new(p: &Polytope, xi: QVector) -> Result<Self> {
        if xi.len() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: xi.len(),
            });
        }
        for v in p.vertices() {
            for e in &v.edges {
                if dot(e, &xi).is_zero() {
                    return Err(Error::NotPolarizing {
                        xi: fmt_vector(&xi),
                        vertex: fmt_vector(&v.point),
                        edge: fmt_vector(e),
                    });
                }
            }
        }
        Ok(PolarizingVector { xi })
    }

    pub fn xi(&self) -> &[Rational] {
        &self.xi
    }
}

/// First polarizing vector on the moment curve `(1, t, t^2, ..)` for
/// `t = seed, seed + 1, ..`.
///
/// Each edge direction `a` pairs with the curve as a nonzero polynomial in
/// `t` of degree below `dim`, so at most `(#directions) * (dim - 1)` values of
/// `t` are rejected and the search terminates.
pub fn find_polarizing(p: &Polytope, seed: i64) -> PolarizingVector {
    let directions = p.edge_directions();
    let mut t = seed;
    loop {
        let xi = moment_curve(p.dim(), t);
        if directions.iter().all(|d| !dot(d, &xi).is_zero()) {
            return PolarizingVector { xi };
        }
        t += 1;
    }
}

fn moment_curve(dim: usize, t: i64) -> QVector {
    let t = int(t);
    let mut acc = Rational::one();
    (0..dim)
        .map(|_| {
            let cur = acc.clone();
            acc *= &t;
            cur
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedCone {
    pub vertex: usize,
    pub apex: QVector,
    /// Polarized generators, in the polytope's edge order.
    pub generators: Vec<QVector>,
    pub flipped: Vec<bool>,
    pub flip_count: usize,
    /// Rows map `x - apex` to generator coordinates.
    coords: Matrix,
}

impl PolarizedCone {
    /// Builds the cone `apex + sum R_{>=0} generators`.
    pub fn new(vertex: usize, apex: QVector, generators: Vec<QVector>, flipped: Vec<bool>) -> Self {
        let n = apex.len();
        // column j of the generator matrix is generators[j]
        let columns: Matrix = (0..n)
            .map(|r| generators.iter().map(|g| g[r].clone()).collect())
            .collect();
        let coords = inverse(&columns).expect("cone generators must be linearly independent");
        let flip_count = flipped.iter().filter(|&&f| f).count();
        PolarizedCone {
            vertex,
            apex,
            generators,
            flipped,
            flip_count,
            coords,
        }
    }

    /// `(-1)^flip_count`.
    pub fn sign(&self) -> i32 {
        if self.flip_count.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Coordinates `m` with `x = apex + sum m_j generators[j]`, unrestricted
    /// in sign.
    pub fn coordinates(&self, x: &[Rational]) -> QVector {
        mat_vec(&self.coords, &sub(x, &self.apex))
    }

    /// Generator coordinates of `x` if it lies in the cone.
    pub fn membership(&self, x: &[Rational]) -> Option<QVector> {
        let m = self.coordinates(x);
        m.iter().all(|c| !c.is_negative()).then_some(m)
    }

    /// The point `apex + sum m_j generators[j]`.
    pub fn point_at(&self, m: &[Rational]) -> QVector {
        let mut x = self.apex.clone();
        for (g, c) in self.generators.iter().zip(m) {
            for (xi, gi) in x.iter_mut().zip(g) {
                *xi += c * gi;
            }
        }
        x
    }
}

/// One polarized cone per vertex, in vertex order.
pub fn polarize_cones(p: &Polytope, xi: &PolarizingVector) -> Result<Vec<PolarizedCone>> {
    p.vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut generators = Vec::with_capacity(p.dim());
            let mut flipped = Vec::with_capacity(p.dim());
            for e in &v.edges {
                let pairing = dot(e, xi.xi());
                if pairing.is_zero() {
                    return Err(Error::NotPolarizing {
                        xi: fmt_vector(xi.xi()),
                        vertex: fmt_vector(&v.point),
                        edge: fmt_vector(e),
                    });
                }
                if pairing.is_positive() {
                    generators.push(e.iter().map(|x| -x).collect());
                    flipped.push(true);
                } else {
                    generators.push(e.clone());
                    flipped.push(false);
                }
            }
            Ok(PolarizedCone::new(i, v.point.clone(), generators, flipped))
        })
        .collect()
}

/// Generator coordinates of `x` in `cone`, or `None` when outside.
pub fn cone_membership(cone: &PolarizedCone, x: &[Rational]) -> Option<QVector> {
    cone.membership(x)
}
