//! Polarizes the tangent cones of a triangle and a cube and shows which
//! edge vectors get flipped.
//!
//!     cargo run --example polarize_cones

use weighted_polar::exactmath::{fmt_vector, int};
use weighted_polar::polarize::{find_polarizing, polarize_cones, PolarizingVector};
use weighted_polar::polytope::builtin;

fn main() -> weighted_polar::Result<()> {
    let tri = builtin("simplex:2,3")?;
    for seed in [2, 3, -2] {
        let xi = find_polarizing(&tri, seed);
        println!("triangle, xi = {}", fmt_vector(xi.xi()));
        for cone in polarize_cones(&tri, &xi)? {
            let gens: Vec<String> = cone
                .generators
                .iter()
                .zip(&cone.flipped)
                .map(|(g, f)| format!("{}{}", fmt_vector(g), if *f { " (flipped)" } else { "" }))
                .collect();
            println!(
                "  apex {} sign {:+} generators {}",
                fmt_vector(&cone.apex),
                cone.sign(),
                gens.join(", ")
            );
        }
    }

    // (1, 0) is orthogonal to the vertical edges of the square
    let square = builtin("cube:2,1")?;
    match PolarizingVector::new(&square, vec![int(0), int(1)]) {
        Ok(_) => println!("(0, 1) accepted"),
        Err(e) => println!("square, xi = (0, 1): {e}"),
    }

    let cube = builtin("cube:3,1")?;
    let xi = find_polarizing(&cube, 1);
    let cones = polarize_cones(&cube, &xi)?;
    let positive = cones.iter().filter(|c| c.sign() > 0).count();
    println!(
        "cube, xi = {}: {} cones, {} positive",
        fmt_vector(xi.xi()),
        cones.len(),
        positive
    );
    Ok(())
}
