//! Moment-matched exponential/exponential surrogate and the ruin
//! approximation it induces.
//!
//! ```bash
//! cargo run --release --example devylder_approximation
//! ```

use ruinprob::{devylder_params, devylder_psi, DistributionSpec, RiskModel};

fn main() -> ruinprob::Result<()> {
    let model = RiskModel::new(
        10.0,
        4.0,
        DistributionSpec::erlang(3, 2.0)?,
        DistributionSpec::erlang(2, 0.5)?,
    )?;

    let mm = model.mixed_moments();
    println!("original model: c = 10, lambda = 4, Erlang(3,2) claims, Erlang(2,0.5) funds");
    println!(
        "net-jump moments: E[(xi-eta)^2] = {:.6}, E[(xi-eta)^3] = {:.6}",
        mm.m2, mm.m3
    );

    let p = devylder_params(&model)?;
    println!();
    println!("surrogate (matches the first three net-outflow moments and the mean ratio):");
    println!("  premium rate    = {:.6}", p.premium_rate);
    println!("  claim intensity = {:.6}", p.claim_intensity);
    println!("  claim mean      = {:.6}", p.claim_mean);
    println!("  fund mean       = {:.6}", p.fund_mean);

    let psi = devylder_psi(&model)?;
    println!();
    println!("psi_DV(x) = {psi}");
    for x in [0.0, 1.0, 2.0, 5.0, 10.0] {
        println!("  psi_DV({x}) = {:.6}", psi.evaluate(x));
    }

    // an exponential/exponential model is its own surrogate
    let fixed_point = RiskModel::new(
        10.0,
        4.0,
        DistributionSpec::exponential(2.0)?,
        DistributionSpec::exponential(0.5)?,
    )?;
    let q = devylder_params(&fixed_point)?;
    println!();
    println!(
        "exponential/exponential input maps to itself: (c, lambda, mu1, mu2) = \
         ({:.3}, {:.3}, {:.3}, {:.3})",
        q.premium_rate, q.claim_intensity, q.claim_mean, q.fund_mean
    );
    Ok(())
}
