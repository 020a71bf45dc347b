//! Sample-size planning from the concentration bound
//! P[|psi - psi_hat| > eps] <= 2 e^{-2 eps^2 N}.
//!
//! ```bash
//! cargo run --release --example sample_size_planning
//! ```

use ruinprob::{hoeffding_n, hoeffding_radius};

fn main() -> ruinprob::Result<()> {
    println!("{:>8}  {:>8}  {:>12}", "epsilon", "delta", "N");
    for (epsilon, delta) in [
        (0.001, 0.001),
        (0.001, 0.01),
        (0.005, 0.001),
        (0.01, 0.001),
        (0.5, 0.001),
    ] {
        let n = hoeffding_n(epsilon, delta)?;
        println!("{epsilon:>8}  {delta:>8}  {n:>12}");
    }

    println!();
    println!("radius achieved by a fixed budget at delta = 0.001:");
    for n in [10_000u64, 100_000, 1_000_000, 3_800_452] {
        println!("  N = {n:>9}  ->  eps = {:.6}", hoeffding_radius(0.001, n));
    }
    Ok(())
}
