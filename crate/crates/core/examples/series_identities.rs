//! Prints the Todd, L-hat and Q_y series and checks the identities relating
//! them up to a chosen order.
//!
//!     cargo run --example series_identities -- 10

use weighted_polar::exactmath::{frac, int};
use weighted_polar::series::{hirzebruch_series, lhat_series, qy_series, todd_series, verify_identities};
use weighted_polar::weights::WeightParam;

fn main() -> weighted_polar::Result<()> {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    println!("Todd: {}", todd_series(order));
    println!("Lhat: {}", lhat_series(order));
    for y in [int(0), int(1), frac(1, 2)] {
        let w = WeightParam::new(y)?;
        println!("Q_y at y = {}: {}", w.y(), qy_series(&w, order));
    }
    println!("Q(y, x) to x^3: {}", hirzebruch_series(3.min(order)));
    print!("{}", verify_identities(order)?);
    Ok(())
}
