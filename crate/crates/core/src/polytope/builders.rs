use num_traits::{One, Signed, Zero};

use super::{HalfSpace, Polytope};
use crate::error::{Error, Result};
use crate::exactmath::{int, parse_rational, Rational};

pub const BUILTIN_HELP: &str = "\
interval:D          [0, D] in R^1
cube:N,S            [0, S]^N
simplex:N,D         {x >= 0, x_1 + .. + x_N <= D}
triangle:A,B        {x >= 0, y >= 0, B x + A y <= A B} (lattice right triangle)
trapezoid           {x >= 0, y >= 0, y <= 1, x + y <= 2}
prism               {x >= 0, y >= 0, x + y <= 1, 0 <= z <= 1}
octahedron          |x| + |y| + |z| <= 1 (not simple)";

fn unit(n: usize, k: usize, sign: i64) -> Vec<Rational> {
    (0..n).map(|i| if i == k { int(sign) } else { Rational::zero() }).collect()
}

fn check_positive(name: &str, x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::Parse {
            line: 0,
            field: name.to_string(),
            message: format!("must be positive, got {x}"),
        })
    }
}

/// `[0, side]^n`.
pub fn hypercube(n: usize, side: Rational) -> Result<Polytope> {
    check_positive("side", &side)?;
    let mut facets = Vec::with_capacity(2 * n);
    for k in 0..n {
        facets.push(HalfSpace::new(unit(n, k, 1), Rational::zero()));
        facets.push(HalfSpace::new(unit(n, k, -1), -side.clone()));
    }
    Polytope::new(n, facets)
}

/// `[0, d]` in one dimension.
pub fn interval(d: Rational) -> Result<Polytope> {
    hypercube(1, d)
}

/// `{x >= 0, sum x_i <= d}`.
pub fn dilated_simplex(n: usize, d: Rational) -> Result<Polytope> {
    check_positive("d", &d)?;
    let mut facets: Vec<HalfSpace> =
        (0..n).map(|k| HalfSpace::new(unit(n, k, 1), Rational::zero())).collect();
    facets.push(HalfSpace::new(vec![-Rational::one(); n], -d));
    Polytope::new(n, facets)
}

fn from_rows(dim: usize, rows: &[(&[i64], i64)]) -> Result<Polytope> {
    Polytope::new(
        dim,
        rows.iter()
            .map(|(u, l)| HalfSpace::new(u.iter().map(|&x| int(x)).collect(), int(*l)))
            .collect(),
    )
}

/// Builds a named polytope from a `name:params` string (see [`BUILTIN_HELP`]).
pub fn builtin(spec: &str) -> Result<Polytope> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let args: Vec<&str> = if params.is_empty() {
        Vec::new()
    } else {
        params.split(',').collect()
    };
    let bad = |message: String| Error::Parse {
        line: 0,
        field: format!("builtin `{spec}`"),
        message,
    };
    let rational = |i: usize| -> Result<Rational> {
        let s = args.get(i).ok_or_else(|| bad(format!("missing parameter {}", i + 1)))?;
        parse_rational(s).ok_or_else(|| bad(format!("`{s}` is not an integer or p/q literal")))
    };
    let count = |i: usize| -> Result<usize> {
        let s = args.get(i).ok_or_else(|| bad(format!("missing parameter {}", i + 1)))?;
        s.trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| bad(format!("`{s}` is not a positive dimension")))
    };
    let arity = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(bad(format!("expected {k} parameters, got {}", args.len())))
        }
    };
    match name.trim() {
        "interval" => {
            arity(1)?;
            interval(rational(0)?)
        }
        "cube" => {
            arity(2)?;
            hypercube(count(0)?, rational(1)?)
        }
        "simplex" => {
            arity(2)?;
            dilated_simplex(count(0)?, rational(1)?)
        }
        "triangle" => {
            arity(2)?;
            let (a, b) = (rational(0)?, rational(1)?);
            check_positive("A", &a)?;
            check_positive("B", &b)?;
            Polytope::new(
                2,
                vec![
                    HalfSpace::new(unit(2, 0, 1), Rational::zero()),
                    HalfSpace::new(unit(2, 1, 1), Rational::zero()),
                    HalfSpace::new(vec![-b.clone(), -a.clone()], -(a * b)),
                ],
            )
        }
        "trapezoid" => {
            arity(0)?;
            from_rows(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[0, -1], -1), (&[-1, -1], -2)])
        }
        "prism" => {
            arity(0)?;
            from_rows(
                3,
                &[
                    (&[1, 0, 0], 0),
                    (&[0, 1, 0], 0),
                    (&[-1, -1, 0], -1),
                    (&[0, 0, 1], 0),
                    (&[0, 0, -1], -1),
                ],
            )
        }
        "octahedron" => {
            arity(0)?;
            let mut rows = Vec::new();
            for sx in [1, -1] {
                for sy in [1, -1] {
                    for sz in [1, -1] {
                        rows.push([sx, sy, sz]);
                    }
                }
            }
            let rows: Vec<(&[i64], i64)> = rows.iter().map(|r| (&r[..], -1)).collect();
            from_rows(3, &rows)
        }
        other => Err(bad(format!("unknown builtin `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::qvec;

    #[test]
    fn dilated_triangle() {
        let t = dilated_simplex(2, int(2)).unwrap();
        let pts: Vec<_> = t.vertices().iter().map(|v| v.point.clone()).collect();
        assert_eq!(pts, vec![qvec(&[0, 0]), qvec(&[0, 2]), qvec(&[2, 0])]);
    }

    #[test]
    fn cube_is_regular() {
        let c = hypercube(3, int(1)).unwrap();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert!(c.is_regular() && c.is_integral());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("simplex:2,2").unwrap().vertices().len(), 3);
        assert_eq!(builtin("interval:2").unwrap().vertices().len(), 2);
        assert_eq!(builtin("trapezoid").unwrap().vertices().len(), 4);
        assert_eq!(builtin("prism").unwrap().vertices().len(), 6);
        assert!(builtin("trapezoid").unwrap().is_regular());
        assert!(builtin("prism").unwrap().is_regular());
        assert!(!builtin("triangle:2,1").unwrap().is_regular());
        assert!(matches!(builtin("octahedron"), Err(Error::NotSimple { .. })));
        assert!(matches!(builtin("cube:2"), Err(Error::Parse { .. })));
        assert!(matches!(builtin("simplex:2,-1"), Err(Error::Parse { .. })));
        assert!(matches!(builtin("blob"), Err(Error::Parse { .. })));
    }
}
