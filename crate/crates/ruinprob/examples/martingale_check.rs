//! Statistical self-test of the exponential martingale: at the adjustment
//! coefficient the mean of e^{-R U_t} is exactly 1; at any other rate it is
//! exp(t g(r)).
//!
//! ```bash
//! cargo run --release --example martingale_check
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ruinprob::{
    adjustment_coefficient, adjustment_residual, martingale_self_test, DistributionSpec, RiskModel,
};

fn main() -> ruinprob::Result<()> {
    let model = RiskModel::new(
        10.0,
        4.0,
        DistributionSpec::erlang(3, 2.0)?,
        DistributionSpec::erlang(2, 0.5)?,
    )?;
    let r_hat = adjustment_coefficient(&model, 1e-12)?.r_hat;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 500_000;

    println!("Erlang/Erlang model, horizon t = 1, {n} replications");
    println!(
        "{:>12}  {:>10}  {:>10}  {:>10}",
        "rate", "mean", "expected", "std err"
    );
    // perturbations stay at or below R: above it the estimator's variance
    // exp(g(2r)) blows up and the sample mean is no longer meaningful
    for (label, r) in [("R", r_hat), ("0.5 R", 0.5 * r_hat), ("0.75 R", 0.75 * r_hat)] {
        let expected = adjustment_residual(&model, r)?.exp();
        let check = martingale_self_test(&model, r, 1.0, n, &mut rng);
        println!(
            "{label:>12}  {:>10.6}  {expected:>10.6}  {:>10.6}",
            check.mean, check.std_error
        );
    }
    println!();
    println!("(at r = R the expected value is exactly 1)");
    Ok(())
}
