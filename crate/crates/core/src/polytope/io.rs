//! JSON polytope files.
//!
//! ```text
//! {
//!   "name": "unit square",          // optional
//!   "dim": 2,
//!   "facets": [[1, 0, 0], [0, 1, 0], [-1, 0, -1], [0, -1, -1]]
//! }
//! ```
//!
//! Each facet row is `[u_1, .., u_n, lambda]` for `<x, u> >= lambda`. Numbers
//! are JSON integers or strings holding an integer or `p/q` literal; JSON
//! floats are rejected.

use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::value::RawValue;

use super::{HalfSpace, Polytope};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile<'a> {
    #[allow(dead_code)]
    name: Option<String>,
    dim: usize,
    #[serde(borrow)]
    facets: Vec<&'a RawValue>,
}

struct Literal(Rational);

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct LiteralVisitor;
        impl Visitor<'_> for LiteralVisitor {
            type Value = Literal;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Literal, E> {
                Ok(Literal(Rational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Literal, E> {
                Ok(Literal(Rational::from_integer(v.into())))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Literal, E> {
                Err(E::custom(format!(
                    "float literal {v} is not allowed; write an integer or \"p/q\""
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Literal, E> {
                parse_rational(v)
                    .map(Literal)
                    .ok_or_else(|| E::custom(format!("`{v}` is not an integer or p/q literal")))
            }
        }
        d.deserialize_any(LiteralVisitor)
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset].bytes().filter(|&b| b == b'\n').count() + 1
}

/// Parses the JSON polytope format and builds the polytope.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let raw: RawFile<'_> = serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let field = ["dim", "facets", "name"]
            .into_iter()
            .find(|f| msg.contains(&format!("`{f}`")))
            .unwrap_or("document");
        Error::Parse {
            line: e.line(),
            field: field.to_string(),
            message: msg,
        }
    })?;

    let mut facets = Vec::with_capacity(raw.facets.len());
    for (i, row) in raw.facets.iter().enumerate() {
        let start = row.get().as_ptr() as usize - text.as_ptr() as usize;
        let line = line_of(text, start);
        let field = format!("facets[{i}]");
        let values: Vec<Literal> = serde_json::from_str(row.get()).map_err(|e| Error::Parse {
            line: line + e.line() - 1,
            field: field.clone(),
            message: e.to_string(),
        })?;
        if values.len() != raw.dim + 1 {
            return Err(Error::Parse {
                line,
                field,
                message: format!(
                    "expected {} numbers (normal of length dim = {} plus offset), found {}",
                    raw.dim + 1,
                    raw.dim,
                    values.len()
                ),
            });
        }
        let mut values: Vec<Rational> = values.into_iter().map(|l| l.0).collect();
        let offset = values.pop().unwrap();
        facets.push(HalfSpace::new(values, offset));
    }
    Polytope::new(raw.dim, facets)
}

pub fn from_file(path: impl AsRef<Path>) -> Result<Polytope> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_polytope(&text)
}
