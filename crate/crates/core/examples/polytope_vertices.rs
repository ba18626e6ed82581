//! Builds a few simple polytopes from half-spaces and lists their vertices,
//! edge vectors and faces.
//!
//!     cargo run --example polytope_vertices

use weighted_polar::exactmath::{fmt_vector, frac, int};
use weighted_polar::polytope::{builtin, HalfSpace, Polytope};

fn main() -> weighted_polar::Result<()> {
    // x >= 0, y >= 0, x + y <= 5/2: simple but not integral
    let p = Polytope::new(
        2,
        vec![
            HalfSpace::new(vec![int(1), int(0)], int(0)),
            HalfSpace::new(vec![int(0), int(1)], int(0)),
            HalfSpace::new(vec![int(-1), int(-1)], -frac(5, 2)),
        ],
    )?;
    describe("half-spaces", &p);

    for name in ["trapezoid", "prism", "triangle:2,1"] {
        describe(name, &builtin(name)?);
    }

    match builtin("octahedron") {
        Ok(_) => println!("octahedron unexpectedly accepted"),
        Err(e) => println!("octahedron: {e}"),
    }
    Ok(())
}

fn describe(name: &str, p: &Polytope) {
    println!(
        "{name}: dim {}, {} vertices, regular {}, integral {}",
        p.dim(),
        p.vertices().len(),
        p.is_regular(),
        p.is_integral()
    );
    for v in p.vertices() {
        let edges: Vec<String> = v.edges.iter().map(|e| fmt_vector(e)).collect();
        println!("  {} edges {}", fmt_vector(&v.point), edges.join(" "));
    }
    let faces = p.faces();
    let mut by_codim = vec![0usize; p.dim() + 1];
    for f in &faces {
        by_codim[f.codim()] += 1;
    }
    println!("  faces by codimension: {by_codim:?}");
}
