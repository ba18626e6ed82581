//! Checks that the weighted indicator of a polytope equals the signed sum of
//! its polarized cone indicators, first with y left symbolic and then at a
//! few numeric values of y.
//!
//!     cargo run --example weighted_decomposition

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weighted_polar::exactmath::{frac, int};
use weighted_polar::polarize::{find_polarizing, polarize_cones};
use weighted_polar::polytope::builtin;
use weighted_polar::weights::{check_with_cones, sample_points, SymbolicY, WeightParam};

fn main() -> weighted_polar::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["interval:3", "simplex:2,2", "trapezoid", "prism", "cube:3,2"] {
        let p = builtin(name)?;
        let xi = find_polarizing(&p, 3);
        let cones = polarize_cones(&p, &xi)?;
        let samples = sample_points(&p, &xi, 10, &mut rng);
        let ok = samples
            .iter()
            .filter(|x| check_with_cones(&p, &cones, x, &SymbolicY).equal)
            .count();
        println!("{name:12} symbolic y: {ok}/{} points", samples.len());
    }

    // the edge midpoint of the triangle has weight 1/(1+y)
    let p = builtin("simplex:2,2")?;
    let xi = find_polarizing(&p, 1);
    let cones = polarize_cones(&p, &xi)?;
    let x = vec![int(1), int(0)];
    println!("{}", check_with_cones(&p, &cones, &x, &SymbolicY));
    for y in [int(0), int(1), frac(-1, 2), int(3)] {
        let w = WeightParam::new(y)?;
        println!("y = {}: {}", w.y(), check_with_cones(&p, &cones, &x, &w));
    }
    match WeightParam::new(int(-1)) {
        Ok(_) => println!("y = -1 accepted"),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
