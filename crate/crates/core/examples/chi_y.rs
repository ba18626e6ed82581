//! Evaluates the chi_y identity at numeric points and reads off lattice-point
//! multiplicities from the weighted lattice polynomial.
//!
//!     cargo run --example chi_y

use weighted_polar::exactmath::{fmt_vector, frac, int};
use weighted_polar::latticegen::{chi_y_eval, weighted_count, CodimCounts, WeightedLatticeSum};
use weighted_polar::polytope::builtin;
use weighted_polar::weights::WeightParam;

fn main() -> weighted_polar::Result<()> {
    let p = builtin("simplex:2,3")?;
    for (y, z) in [
        (int(2), vec![frac(1, 2), int(3)]),
        (frac(-1, 3), vec![int(-2), frac(5, 7)]),
        (int(0), vec![int(2), int(3)]),
    ] {
        println!("y = {y}, z = {}: {}", fmt_vector(&z), chi_y_eval(&p, &y, &z)?);
    }

    // z = (2, 2) puts z^a = 1 on the slanted edge
    match chi_y_eval(&p, &int(1), &[int(2), int(2)]) {
        Ok(c) => println!("{c}"),
        Err(e) => println!("{e}"),
    }

    let sum = WeightedLatticeSum::new(&p);
    for alpha in [[0, 0], [1, 1], [1, 0], [2, 2]] {
        println!("multiplicity of {alpha:?}: {}", sum.multiplicity(&alpha));
    }
    println!("weighted count: {}", CodimCounts::of(&p));
    for y in [int(0), int(1)] {
        let w = WeightParam::new(y)?;
        println!("  at y = {}: {}", w.y(), weighted_count(&p, &w));
    }
    Ok(())
}
