//! Moves the polarizing vector across one wall and shows that the
//! contributions of the two endpoints of each crossing edge cancel.
//!
//!     cargo run --example wall_crossing

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use num_traits::Zero;
use weighted_polar::exactmath::fmt_vector;
use weighted_polar::polytope::builtin;
use weighted_polar::weights::{crossing_contributions, sample_points, SymbolicY, WallCrossing};

fn main() -> weighted_polar::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = builtin("trapezoid")?;
    for dir in p.edge_directions() {
        let crossing = WallCrossing::engineer(&p, &dir, &mut rng)?;
        println!(
            "wall orthogonal to {}: {} -> {}",
            fmt_vector(&dir),
            fmt_vector(crossing.before.xi()),
            fmt_vector(crossing.after.xi())
        );
        let mut shown = 0;
        for x in sample_points(&p, &crossing.before, 4, &mut rng) {
            let (edges, others) = crossing_contributions(&p, &crossing, &x, &SymbolicY)?;
            for e in edges.iter().filter(|e| e.s_v != e.s_v_after || e.s_u != e.s_u_after) {
                assert!(e.imbalance().is_zero());
                shown += 1;
                if shown > 4 {
                    continue;
                }
                println!(
                    "  x = {} {:?}: v{} {} -> {}, v{} {} -> {}, imbalance {}",
                    fmt_vector(&x),
                    e.case,
                    e.v,
                    e.s_v,
                    e.s_v_after,
                    e.u,
                    e.s_u,
                    e.s_u_after,
                    e.imbalance()
                );
            }
            assert!(others.iter().all(|d| d.is_zero()));
        }
    }
    Ok(())
}
