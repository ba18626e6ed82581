//! Sums the weighted vertex generating functions of a lattice polytope and
//! compares the result with its weighted lattice polynomial, both as exact
//! rational functions and as truncated series over a box.
//!
//!     cargo run --example brion_identity

use num_traits::Zero;
use weighted_polar::latticegen::{brion_check, cone_series_sum, weighted_indicator, LatticeBox};
use weighted_polar::polarize::find_polarizing;
use weighted_polar::polytope::builtin;
use weighted_polar::weights::SymbolicY;

fn main() -> weighted_polar::Result<()> {
    for name in ["interval:3", "cube:2,1", "simplex:2,2", "trapezoid"] {
        let p = builtin(name)?;
        let chk = brion_check(&p)?;
        println!(
            "{name:12} {} lattice points, vertex sum {} weighted sum",
            chk.rhs.points.len(),
            if chk.equal { "=" } else { "!=" }
        );
    }

    let p = builtin("simplex:2,2")?;
    let xi = find_polarizing(&p, 2);
    let region = LatticeBox::around(&p).inflate(2);
    let series = cone_series_sum(&p, &xi, &region, &SymbolicY)?;
    let truth = weighted_indicator(&p, &region, &SymbolicY);
    for (q, w) in &series {
        if w != &truth[q] {
            println!("mismatch at {q:?}");
        }
    }
    println!("cone series on {} box points:", series.len());
    for (q, w) in series.iter().filter(|(_, w)| !w.is_zero()) {
        println!("  {q:?}: {w}");
    }

    match brion_check(&builtin("triangle:2,1")?) {
        Ok(_) => println!("non-regular triangle accepted"),
        Err(e) => println!("triangle:2,1: {e}"),
    }
    Ok(())
}
