//! Thin command-line front end over the `ruinprob` library.
//!
//! Exit codes: 0 success, 2 unreadable/invalid config or usage error,
//! 3 method inapplicable to the model, 1 any other failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ruinprob::config::ModelConfig;
use ruinprob::error::Error;
use ruinprob::montecarlo::{estimate_ruin, hoeffding_n, SimPlan};
use ruinprob::table::build_table;
use ruinprob::{closed_form, devylder, lundberg};

#[derive(Parser)]
#[command(
    name = "ruinprob",
    version,
    about = "Ruin probabilities for a risk model with additional funds at claim epochs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Csv,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of simulations needed for accuracy epsilon at
    /// confidence delta.
    Plan {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        delta: f64,
    },
    /// Adjustment coefficient and the exponential bound parameters.
    Bound {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Moment-matched approximation of the ruin function.
    Devylder {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact ruin function (exponential claims and funds only).
    Exact {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Monte Carlo estimate over the configured (or given) surplus grid.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Override the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the planned number of paths.
        #[arg(long)]
        paths: Option<u64>,
        /// Surplus points to estimate at (repeatable); defaults to the
        /// config grid.
        #[arg(long = "x")]
        x: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Full comparison table over the config grid.
    Table {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        paths: Option<u64>,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_)
        | Error::Parse(_)
        | Error::InvalidParameters(_)
        | Error::NonPositiveEpsilon(_) => 2,
        Error::UnsupportedModel(_)
        | Error::GateViolated { .. }
        | Error::DegenerateMeanRatio { .. }
        | Error::NonPositiveMargin { .. }
        | Error::NoPositiveRoot { .. }
        | Error::BracketingFailed { .. } => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Plan { epsilon, delta } => {
            let n = hoeffding_n(epsilon, delta)?;
            println!("N = {n}");
        }
        Command::Bound { config, json } => {
            let config = ModelConfig::load(config)?;
            let model = config.to_model()?;
            let res = lundberg::adjustment_coefficient(&model, lundberg::DEFAULT_TOL)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "r_hat": res.r_hat,
                        "bracket": [res.bracket.0, res.bracket.1],
                        "residual": res.residual,
                        "iterations": res.iterations,
                        "bound": "psi(x) <= exp(-r_hat * x)",
                    })
                );
            } else {
                println!("R_hat = {:.6}", res.r_hat);
            }
        }
        Command::Devylder { config, json } => {
            let config = ModelConfig::load(config)?;
            let model = config.to_model()?;
            let params = devylder::devylder_params(&model)?;
            let psi = devylder::devylder_psi(&model)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "surrogate": params,
                        "coefficient": psi.coefficient(),
                        "rate": psi.rate(),
                    })
                );
            } else {
                println!(
                    "psi_DV(x) = {:.6} * exp({:.6} x)",
                    psi.coefficient(),
                    psi.rate()
                );
            }
        }
        Command::Exact { config, json } => {
            let config = ModelConfig::load(config)?;
            let model = config.to_model()?;
            let psi = closed_form::exact_exponential_ruin(&model)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "coefficient": psi.coefficient(),
                        "rate": psi.rate(),
                        "certain_ruin": psi.is_certain_ruin(),
                    })
                );
            } else if psi.is_certain_ruin() {
                println!("psi(x) = 1 for all x >= 0 (net profit margin <= 0)");
            } else {
                println!(
                    "psi(x) = {:.6} * exp({:.6} x)",
                    psi.coefficient(),
                    psi.rate()
                );
            }
        }
        Command::Simulate {
            config,
            seed,
            paths,
            x,
            json,
        } => {
            let config = ModelConfig::load(config)?;
            let model = config.to_model()?;
            let seed = seed.unwrap_or(config.mc.seed);
            let n_paths = match paths {
                Some(n) => n,
                None => hoeffding_n(config.mc.epsilon, config.mc.delta)?,
            };
            let grid = if x.is_empty() {
                config.x_grid.clone()
            } else {
                x
            };
            let mut records = Vec::new();
            for &x in &grid {
                let margin = model.net_profit_margin();
                let result = if margin <= 0.0 {
                    estimate_ruin(
                        &model,
                        &SimPlan::new(1, seed, config.truncation_for(&model, x), x)?,
                    )
                } else {
                    let plan = SimPlan::new(n_paths, seed, config.truncation_for(&model, x), x)?;
                    estimate_ruin(&model, &plan)
                };
                let radius = result.hoeffding_radius(config.mc.delta);
                if json {
                    records.push(json!({
                        "x": x,
                        "psi_hat": result.psi_hat,
                        "ruined": result.ruined,
                        "n_paths": result.n_paths,
                        "truncated_paths": result.truncated_paths,
                        "seed": seed,
                        "delta": config.mc.delta,
                        "hoeffding_radius": radius,
                    }));
                } else {
                    println!(
                        "x = {x}  psi_hat = {:.6}  (ruined {} / {}, radius {:.6} at delta = {}, truncated {})",
                        result.psi_hat,
                        result.ruined,
                        result.n_paths,
                        radius,
                        config.mc.delta,
                        result.truncated_paths,
                    );
                }
            }
            if json {
                println!("{}", serde_json::Value::Array(records));
            }
        }
        Command::Table {
            config,
            output,
            seed,
            paths,
        } => {
            let config = ModelConfig::load(config)?;
            let report = build_table(&config, paths, seed)?;
            match output {
                OutputFormat::Csv => print!("{}", report.to_csv()),
                OutputFormat::Markdown => print!("{}", report.to_markdown()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
