//! Seeded, deterministic-parallel Monte Carlo estimate of the ruin
//! probability, next to the closed-form value it should reproduce.
//!
//! ```bash
//! cargo run --release --example monte_carlo_estimate
//! ```

use ruinprob::{
    estimate_ruin, exact_exponential_ruin, DistributionSpec, RiskModel, SimPlan, Truncation,
};

fn main() -> ruinprob::Result<()> {
    let model = RiskModel::new(
        10.0,
        4.0,
        DistributionSpec::exponential(2.0)?,
        DistributionSpec::exponential(0.5)?,
    )?;
    let exact = exact_exponential_ruin(&model)?;
    let n_paths = 1_000_000;
    let delta = 0.001;

    println!("exponential/exponential model, {n_paths} paths per point, seed 42");
    println!(
        "{:>4}  {:>10}  {:>10}  {:>10}  {:>10}",
        "x", "psi_hat", "exact", "|diff|", "radius"
    );
    for x in [0.0, 1.0, 2.0, 5.0, 10.0] {
        let plan = SimPlan::new(n_paths, 42, Truncation::default_for(&model, x), x)?;
        let result = estimate_ruin(&model, &plan);
        let truth = exact.evaluate(x);
        println!(
            "{x:>4}  {:>10.6}  {truth:>10.6}  {:>10.6}  {:>10.6}",
            result.psi_hat,
            (result.psi_hat - truth).abs(),
            result.hoeffding_radius(delta),
        );
    }

    // same plan, same result, regardless of the worker count
    let plan = SimPlan::new(100_000, 7, Truncation::default_for(&model, 0.0), 0.0)?;
    let a = estimate_ruin(&model, &plan);
    let b = estimate_ruin(&model, &plan);
    println!();
    println!(
        "determinism: two runs of the same plan agree bit for bit: {} == {}",
        a.psi_hat, b.psi_hat
    );
    Ok(())
}
