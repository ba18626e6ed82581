//! Simple polytopes given by half-spaces `<x, u_i> >= lambda_i`.
//!
//! Construction enumerates vertices exactly, rejects non-simple, unbounded
//! and redundant input, and derives per-vertex edge vectors.

mod builders;
mod io;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    determinant, dot, fmt_vector, is_integer_vector, primitive_q, scale, solve_linear, sub,
    Matrix, QVector, Rational,
};

pub use builders::{builtin, dilated_simplex, hypercube, interval, BUILTIN_HELP};
pub use io::{from_file, parse_polytope};

/// The closed half-space `{x : <x, normal> >= offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: QVector,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: QVector, offset: Rational) -> Self {
        HalfSpace { normal, offset }
    }

    /// `<x, normal> - offset`; nonnegative exactly on the half-space.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot(x, &self.normal) - &self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: QVector,
    /// Indices of the facets tight at this vertex, ascending; exactly `dim`.
    pub active: Vec<usize>,
    /// `edges[j]` is the primitive direction obtained by relaxing facet
    /// `active[j]` while keeping the others tight.
    pub edges: Vec<QVector>,
    /// `neighbors[j]` is the vertex reached along `edges[j]`.
    pub neighbors: Vec<usize>,
}

/// `apex + sum_j R_{>=0} generators[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCone {
    pub apex: QVector,
    pub generators: Vec<QVector>,
}

/// A face, identified by the set of facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub facets: Vec<usize>,
    pub vertices: Vec<usize>,
    /// Average of the face's vertices; lies in its relative interior.
    pub barycenter: QVector,
}

impl Face {
    pub fn codim(&self) -> usize {
        self.facets.len()
    }
}

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    facets: Vec<HalfSpace>,
    vertices: Vec<Vertex>,
    regular: bool,
    integral: bool,
}

impl Polytope {
    pub fn new(dim: usize, facets: Vec<HalfSpace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::WrongDimension { expected: 1, found: 0 });
        }
        for (i, h) in facets.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
            if h.normal.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroNormal { index: i });
            }
        }
        if facets.len() <= dim {
            return Err(Error::TooFewFacets {
                dim,
                found: facets.len(),
            });
        }

        let points = candidate_vertices(dim, &facets);
        if points.is_empty() {
            return Err(Error::NoVertices);
        }
        let mut vertices = Vec::with_capacity(points.len());
        for point in points {
            let active: Vec<usize> = (0..facets.len())
                .filter(|&i| facets[i].slack(&point).is_zero())
                .collect();
            if active.len() != dim {
                return Err(Error::NotSimple {
                    point: fmt_vector(&point),
                    active: active.len(),
                    dim,
                });
            }
            vertices.push(Vertex {
                point,
                active,
                edges: Vec::new(),
                neighbors: Vec::new(),
            });
        }

        let index: BTreeMap<QVector, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.point.clone(), i))
            .collect();
        for vi in 0..vertices.len() {
            let (edges, neighbors) = walk_edges(&vertices[vi], &facets, &index)?;
            vertices[vi].edges = edges;
            vertices[vi].neighbors = neighbors;
        }

        let used: BTreeSet<usize> = vertices.iter().flat_map(|v| v.active.iter().copied()).collect();
        if let Some(index) = (0..facets.len()).find(|i| !used.contains(i)) {
            return Err(Error::RedundantFacet { index });
        }

        let integral = vertices.iter().all(|v| is_integer_vector(&v.point));
        let regular = vertices
            .iter()
            .all(|v| determinant(&v.edges).abs().is_one());
        Ok(Polytope {
            dim,
            facets,
            vertices,
            regular,
            integral,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Vertices in lexicographic order of their coordinates.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge vectors at every vertex form a basis of `Z^n`.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    /// All vertices are lattice points.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Simple by construction; kept for reports.
    pub fn is_simple(&self) -> bool {
        true
    }

    pub fn edge_vectors(&self, vertex: usize) -> &[QVector] {
        &self.vertices[vertex].edges
    }

    pub fn tangent_cone(&self, vertex: usize) -> TangentCone {
        let v = &self.vertices[vertex];
        TangentCone {
            apex: v.point.clone(),
            generators: v.edges.clone(),
        }
    }

    /// Each edge once, as an ordered pair of vertex indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for &j in &v.neighbors {
                out.insert((i.min(j), i.max(j)));
            }
        }
        out.into_iter().collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|h| !h.slack(x).is_negative())
    }

    /// Number of facets tight at `x`, which for a simple polytope is the
    /// codimension of the smallest face containing `x`. `None` outside.
    pub fn face_codim(&self, x: &[Rational]) -> Option<usize> {
        let mut count = 0;
        for h in &self.facets {
            let s = h.slack(x);
            if s.is_negative() {
                return None;
            }
            if s.is_zero() {
                count += 1;
            }
        }
        Some(count)
    }

    /// Every nonempty face, including the polytope itself (no facets) and the
    /// vertices. Ordered by codimension, then by facet set.
    pub fn faces(&self) -> Vec<Face> {
        let mut keys: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for v in &self.vertices {
            for k in 0..=self.dim {
                for subset in v.active.iter().copied().combinations(k) {
                    keys.insert((k, subset));
                }
            }
        }
        keys.into_iter()
            .map(|(_, facets)| {
                let vertices: Vec<usize> = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| facets.iter().all(|f| v.active.contains(f)))
                    .map(|(i, _)| i)
                    .collect();
                let mut sum = vec![Rational::zero(); self.dim];
                for &i in &vertices {
                    for (s, x) in sum.iter_mut().zip(&self.vertices[i].point) {
                        *s += x;
                    }
                }
                let barycenter = scale(&(Rational::one() / Rational::from_integer(vertices.len().into())), &sum);
                Face {
                    facets,
                    vertices,
                    barycenter,
                }
            })
            .collect()
    }

    /// Smallest integer box `[lo, hi]` containing the polytope.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        use num_traits::ToPrimitive;
        let mut lo = vec![i64::MAX; self.dim];
        let mut hi = vec![i64::MIN; self.dim];
        for v in &self.vertices {
            for (k, x) in v.point.iter().enumerate() {
                lo[k] = lo[k].min(x.floor().to_integer().to_i64().expect("coordinate range"));
                hi[k] = hi[k].max(x.ceil().to_integer().to_i64().expect("coordinate range"));
            }
        }
        (lo, hi)
    }

    /// All distinct edge directions up to sign, each normalized so its first
    /// nonzero entry is positive. These are the normals of the walls that
    /// separate chambers of polarizing vectors.
    pub fn edge_directions(&self) -> Vec<QVector> {
        let mut out = BTreeSet::new();
        for v in &self.vertices {
            for e in &v.edges {
                let first = e.iter().find(|x| !x.is_zero()).expect("nonzero edge");
                let d = if first.is_negative() {
                    e.iter().map(|x| -x).collect()
                } else {
                    e.clone()
                };
                out.insert(d);
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim {}, {} facets, {} vertices, simple, regular={}, integral={}",
            self.dim,
            self.facets.len(),
            self.vertices.len(),
            self.regular,
            self.integral
        )?;
        for (i, v) in self.vertices.iter().enumerate() {
            let edges: Vec<String> = v.edges.iter().map(|e| fmt_vector(e)).collect();
            writeln!(
                f,
                "  v{i} {} facets {:?} edges [{}]",
                fmt_vector(&v.point),
                v.active,
                edges.join(", ")
            )?;
        }
        Ok(())
    }
}

/// Feasible solutions of every nonsingular `dim`-subset of facet equations,
/// deduplicated and sorted.
fn candidate_vertices(dim: usize, facets: &[HalfSpace]) -> Vec<QVector> {
    let mut found = BTreeSet::new();
    for subset in (0..facets.len()).combinations(dim) {
        let a: Matrix = subset.iter().map(|&i| facets[i].normal.clone()).collect();
        let b: QVector = subset.iter().map(|&i| facets[i].offset.clone()).collect();
        if let Some(x) = solve_linear(&a, &b) {
            if facets.iter().all(|h| !h.slack(&x).is_negative()) {
                found.insert(x);
            }
        }
    }
    found.into_iter().collect()
}

/// Edge directions at a simple vertex and the vertex each edge leads to.
fn walk_edges(
    v: &Vertex,
    facets: &[HalfSpace],
    index: &BTreeMap<QVector, usize>,
) -> Result<(Vec<QVector>, Vec<usize>)> {
    let dim = v.point.len();
    let a: Matrix = v.active.iter().map(|&i| facets[i].normal.clone()).collect();
    let mut edges = Vec::with_capacity(dim);
    let mut neighbors = Vec::with_capacity(dim);
    for j in 0..dim {
        let rhs: QVector = (0..dim)
            .map(|k| if k == j { Rational::one() } else { Rational::zero() })
            .collect();
        let d = solve_linear(&a, &rhs).expect("active normals of a simple vertex are independent");
        let d = primitive_q(&d).expect("edge direction is nonzero");
        let step = facets
            .iter()
            .filter_map(|h| {
                let rate = dot(&d, &h.normal);
                rate.is_negative().then(|| -h.slack(&v.point) / rate)
            })
            .min()
            .ok_or_else(|| Error::Unbounded {
                vertex: fmt_vector(&v.point),
                direction: fmt_vector(&d),
            })?;
        let next: QVector = v.point.iter().zip(&d).map(|(p, x)| p + &step * x).collect();
        let n = *index
            .get(&next)
            .expect("edge of a simple polytope ends at a vertex");
        debug_assert_eq!(primitive_q(&sub(&next, &v.point)).unwrap(), d);
        edges.push(d);
        neighbors.push(n);
    }
    Ok((edges, neighbors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, int, qvec, rank};

    fn hs(normal: &[i64], offset: i64) -> HalfSpace {
        HalfSpace::new(qvec(normal), int(offset))
    }

    fn unit_square() -> Polytope {
        hypercube(2, int(1)).unwrap()
    }

    fn points(p: &Polytope) -> Vec<QVector> {
        p.vertices().iter().map(|v| v.point.clone()).collect()
    }

    fn vertex_at(p: &Polytope, x: &[i64]) -> usize {
        p.vertices().iter().position(|v| v.point == qvec(x)).unwrap()
    }

    #[test]
    fn square_and_simplex_vertices() {
        assert_eq!(
            points(&unit_square()),
            vec![qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 0]), qvec(&[1, 1])]
        );
        let tri = Polytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, -1], -1)]).unwrap();
        assert_eq!(points(&tri), vec![qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 0])]);
    }

    #[test]
    fn octahedron_is_not_simple() {
        let mut facets = Vec::new();
        for sx in [1, -1] {
            for sy in [1, -1] {
                for sz in [1, -1] {
                    facets.push(hs(&[sx, sy, sz], -1));
                }
            }
        }
        match Polytope::new(3, facets) {
            Err(Error::NotSimple { active, dim, .. }) => {
                assert_eq!(active, 4);
                assert_eq!(dim, 3);
            }
            other => panic!("expected NotSimple, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_and_redundant_rejected() {
        let wedge = Polytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[1, -1], -3)]);
        assert!(matches!(wedge, Err(Error::Unbounded { .. })), "{wedge:?}");
        let redundant = Polytope::new(
            2,
            vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, -1], -1), hs(&[-1, 0], -5)],
        );
        assert!(matches!(redundant, Err(Error::RedundantFacet { index: 3 })));
        assert!(matches!(
            Polytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0)]),
            Err(Error::TooFewFacets { .. })
        ));
    }

    #[test]
    fn square_edge_vectors() {
        let sq = unit_square();
        assert_eq!(sq.edge_vectors(vertex_at(&sq, &[0, 0])), &[qvec(&[1, 0]), qvec(&[0, 1])]);
        assert_eq!(
            sq.edge_vectors(vertex_at(&sq, &[1, 1])),
            &[qvec(&[-1, 0]), qvec(&[0, -1])]
        );
    }

    #[test]
    fn simplex_edge_vectors_at_corner() {
        let tri = dilated_simplex(2, int(1)).unwrap();
        // active facets at (1,0): y >= 0 (index 1) and -x-y >= -1 (index 2)
        let e = tri.edge_vectors(vertex_at(&tri, &[1, 0]));
        assert_eq!(e, &[qvec(&[-1, 1]), qvec(&[-1, 0])]);
        let as_set: BTreeSet<_> = e.iter().cloned().collect();
        assert_eq!(as_set, [qvec(&[-1, 0]), qvec(&[-1, 1])].into_iter().collect());
    }

    #[test]
    fn face_codim_examples() {
        let sq = unit_square();
        assert_eq!(sq.face_codim(&[frac(1, 2), frac(1, 2)]), Some(0));
        assert_eq!(sq.face_codim(&[int(0), frac(1, 2)]), Some(1));
        assert_eq!(sq.face_codim(&qvec(&[1, 1])), Some(2));
        assert_eq!(sq.face_codim(&qvec(&[2, 0])), None);
    }

    #[test]
    fn regularity_flags() {
        assert!(hypercube(3, int(1)).unwrap().is_regular());
        assert!(dilated_simplex(2, int(3)).unwrap().is_regular());
        let skinny = Polytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, -2], -2)]).unwrap();
        assert!(skinny.is_integral());
        assert!(!skinny.is_regular());
        // (2,0) is unimodular; the obstruction sits at (0,1)
        let at = vertex_at(&skinny, &[2, 0]);
        assert_eq!(determinant(&skinny.edge_vectors(at).to_vec()).abs(), int(1));
        let at = vertex_at(&skinny, &[0, 1]);
        assert_eq!(determinant(&skinny.edge_vectors(at).to_vec()).abs(), int(2));
    }

    #[test]
    fn cube_counts() {
        let c = hypercube(3, int(1)).unwrap();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.edges().len(), 12);
        // 1 body + 6 facets + 12 edges + 8 vertices
        assert_eq!(c.faces().len(), 27);
    }

    #[test]
    fn simplicity_and_edge_consistency() {
        for p in [
            hypercube(3, int(2)).unwrap(),
            dilated_simplex(3, int(2)).unwrap(),
            builtin("trapezoid").unwrap(),
            builtin("prism").unwrap(),
            Polytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, -2], -2)]).unwrap(),
        ] {
            for v in p.vertices() {
                assert_eq!(v.active.len(), p.dim());
                assert_eq!(rank(&v.edges), p.dim());
                for (e, &n) in v.edges.iter().zip(&v.neighbors) {
                    let u = &p.vertices()[n];
                    let shared = v.active.iter().filter(|f| u.active.contains(f)).count();
                    assert_eq!(shared, p.dim() - 1);
                    assert_eq!(&primitive_q(&sub(&u.point, &v.point)).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn face_codim_matches_affine_hull_dimension() {
        // brute force: the face through x is spanned by the vertices tight on
        // the same facets; its affine dimension is rank of differences.
        for p in [
            hypercube(3, int(1)).unwrap(),
            dilated_simplex(3, int(1)).unwrap(),
            builtin("trapezoid").unwrap(),
        ] {
            let mut probes: Vec<QVector> = p.vertices().iter().map(|v| v.point.clone()).collect();
            for (a, b) in p.edges() {
                let (pa, pb) = (&p.vertices()[a].point, &p.vertices()[b].point);
                probes.push(pa.iter().zip(pb).map(|(x, y)| (x + y) / int(2)).collect());
            }
            let n = p.vertices().len();
            let mut bary = vec![int(0); p.dim()];
            for v in p.vertices() {
                bary = crate::exactmath::add(&bary, &v.point);
            }
            probes.push(scale(&frac(1, n as i64), &bary));

            for x in probes {
                let tight: Vec<usize> =
                    (0..p.facets().len()).filter(|&i| p.facets()[i].slack(&x).is_zero()).collect();
                let on_face: Vec<&QVector> = p
                    .vertices()
                    .iter()
                    .filter(|v| tight.iter().all(|t| v.active.contains(t)))
                    .map(|v| &v.point)
                    .collect();
                let diffs: Matrix = on_face.iter().map(|q| sub(q, on_face[0])).collect();
                let face_dim = rank(&diffs);
                assert_eq!(p.face_codim(&x), Some(p.dim() - face_dim), "at {}", fmt_vector(&x));
            }
        }
    }

    #[test]
    fn faces_have_interior_barycenters() {
        let p = dilated_simplex(2, int(2)).unwrap();
        for f in p.faces() {
            assert_eq!(p.face_codim(&f.barycenter), Some(f.codim()));
        }
    }
}
