//! Exact ruin probability for exponential claims and exponential funds.
//!
//! ```bash
//! cargo run --release --example exact_ruin
//! ```

use ruinprob::{exact_exponential_ruin, DistributionSpec, RiskModel};

fn main() -> ruinprob::Result<()> {
    let model = RiskModel::new(
        10.0,
        4.0,
        DistributionSpec::exponential(2.0)?,
        DistributionSpec::exponential(0.5)?,
    )?;

    println!("model: c = 10, lambda = 4, claims ~ Exp(2), funds ~ Exp(0.5)");
    println!("net profit margin: {}", model.net_profit_margin());

    let psi = exact_exponential_ruin(&model)?;
    println!("psi(x) = {psi}");
    println!();
    println!("{:>4}  {:>10}", "x", "psi(x)");
    for x in [0.0, 1.0, 2.0, 5.0, 10.0, 20.0] {
        println!("{x:>4}  {:>10.6}", psi.evaluate(x));
    }

    // a model running at a loss is ruined with certainty
    let losing = RiskModel::new(
        1.0,
        4.0,
        DistributionSpec::exponential(2.0)?,
        DistributionSpec::exponential(0.5)?,
    )?;
    let certain = exact_exponential_ruin(&losing)?;
    println!();
    println!(
        "with c = 1 the margin is {} and psi(x) = {}",
        losing.net_profit_margin(),
        certain
    );
    Ok(())
}
