use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot take the primitive vector of the zero vector")]
    ZeroVector,

    #[error("denominator of a rational function is the zero polynomial")]
    ZeroDenominator,

    #[error("coordinate z{index} is zero but the polynomial has a negative exponent in it")]
    ZeroCoordinate { index: usize },

    #[error("y = -1 is not allowed: weights 1/(1+y) and y/(1+y) require y != -1")]
    YMinusOne,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("facet {index} has a zero normal vector")]
    ZeroNormal { index: usize },

    #[error("polytope needs more than {dim} facets, found {found}")]
    TooFewFacets { dim: usize, found: usize },

    #[error("polyhedron has no vertices (empty or not full-dimensional/pointed)")]
    NoVertices,

    #[error("polyhedron is unbounded: the edge from vertex {vertex} along {direction} never leaves it")]
    Unbounded { vertex: String, direction: String },

    #[error("polytope is not simple: vertex {point} has {active} active facets (expected {dim})")]
    NotSimple {
        point: String,
        active: usize,
        dim: usize,
    },

    #[error("facet {index} is redundant: it contains no vertex of the polytope")]
    RedundantFacet { index: usize },

    #[error("xi = {xi} is not polarizing: it is orthogonal to edge {edge} at vertex {vertex}")]
    NotPolarizing {
        xi: String,
        vertex: String,
        edge: String,
    },

    #[error("hypothesis violated: polytope is not regular (edge vectors at vertex {vertex} have determinant {det}, not +-1)")]
    NotRegular { vertex: String, det: String },

    #[error("hypothesis violated: polytope is not integral (vertex {vertex} is not a lattice point)")]
    NotIntegral { vertex: String },

    #[error("pole: z^alpha = 1 for edge {edge} at vertex {vertex}")]
    Pole { vertex: String, edge: String },

    #[error("operation requires a {expected}-dimensional polytope, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    #[error("{0}")]
    Io(String),
}
