//! Full comparison table (simulation, moment-matched approximation,
//! exponential bound) at a desk-scale path budget.
//!
//! ```bash
//! cargo run --release --example comparison_table
//! ```
//!
//! The `ruinprob table` subcommand renders the same report from a config
//! file at the fully planned path count.

use ruinprob::table::build_table;
use ruinprob::ModelConfig;

const CONFIG: &str = r#"{
    "premium_rate": 10.0,
    "claim_intensity": 4.0,
    "claims": { "family": "erlang", "shape": 3, "mean": 2.0 },
    "funds": { "family": "erlang", "shape": 2, "mean": 0.5 },
    "x_grid": [0, 1, 2, 5, 10],
    "mc": { "epsilon": 0.001, "delta": 0.001, "seed": 1 }
}"#;

fn main() -> ruinprob::Result<()> {
    let config = ModelConfig::from_json(CONFIG)?;
    // 200k paths keep this example quick; drop the override to run the
    // planned N = 3,800,452.
    let report = build_table(&config, Some(200_000), None)?;
    print!("{}", report.to_markdown());
    Ok(())
}
