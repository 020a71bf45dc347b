//! Adjustment coefficient and the exponential upper bound psi(x) <= e^{-R x}
//! for three claim/fund family pairs.
//!
//! ```bash
//! cargo run --release --example exponential_bound
//! ```

use ruinprob::{adjustment_coefficient, lundberg_bound, Component, DistributionSpec, RiskModel};

fn main() -> ruinprob::Result<()> {
    let models = [
        (
            "Erlang(3, mean 2) / Erlang(2, mean 0.5)",
            RiskModel::new(
                10.0,
                4.0,
                DistributionSpec::erlang(3, 2.0)?,
                DistributionSpec::erlang(2, 0.5)?,
            )?,
        ),
        (
            "hyperexponential / hyperexponential",
            RiskModel::new(
                10.0,
                4.0,
                DistributionSpec::hyperexponential(vec![
                    Component {
                        weight: 0.4,
                        mean: 0.5,
                    },
                    Component {
                        weight: 0.3,
                        mean: 2.0,
                    },
                    Component {
                        weight: 0.3,
                        mean: 4.0,
                    },
                ])?,
                DistributionSpec::hyperexponential(vec![
                    Component {
                        weight: 0.75,
                        mean: 0.4,
                    },
                    Component {
                        weight: 0.25,
                        mean: 0.8,
                    },
                ])?,
            )?,
        ),
        (
            "Exp(2) / point mass 0.5",
            RiskModel::new(
                10.0,
                4.0,
                DistributionSpec::exponential(2.0)?,
                DistributionSpec::degenerate(0.5)?,
            )?,
        ),
    ];

    for (label, model) in &models {
        let res = adjustment_coefficient(model, 1e-12)?;
        println!("{label}");
        println!(
            "  R = {:.6}   (residual {:.2e}, {} bisection steps)",
            res.r_hat, res.residual, res.iterations
        );
        print!("  bound:");
        for x in [0.0, 1.0, 2.0, 5.0, 10.0] {
            print!("  psi({x}) <= {:.6}", lundberg_bound(res.r_hat, x));
        }
        println!();
        println!();
    }
    Ok(())
}
