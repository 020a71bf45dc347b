//! Ruin probabilities for a compound-Poisson risk model in which the insurer
//! receives additional funds at every claim epoch.
//!
//! The surplus process is
//!
//! ```text
//! X_t(x) = x + c t - sum_{i=1}^{N_t} (xi_i - eta_i)
//! ```
//!
//! with premium rate `c`, Poisson claim arrivals of intensity `lambda`,
//! i.i.d. claim sizes `xi` and i.i.d. additional funds `eta`. The crate
//! computes the infinite-horizon ruin probability `psi(x)` four ways:
//!
//! - [`closed_form`]: exact solution when claims and funds are exponential;
//! - [`lundberg`]: the adjustment coefficient and the exponential upper
//!   bound `psi(x) <= e^{-R x}`;
//! - [`devylder`]: a moment-matched exponential/exponential surrogate;
//! - [`montecarlo`]: seeded, deterministic-parallel simulation with
//!   concentration-bound sample-size planning.
//!
//! [`config`] and [`table`] back the `ruinprob` binary: JSON model configs
//! and side-by-side comparison tables in CSV or markdown.
//!
//! See the crate examples for one runnable program per capability.

pub mod closed_form;
pub mod config;
pub mod devylder;
pub mod dist;
pub mod error;
pub mod lundberg;
pub mod model;
pub mod montecarlo;
pub mod table;

pub use closed_form::{exact_exponential_ruin, RuinFunction};
pub use config::{McConfig, ModelConfig};
pub use devylder::{devylder_params, devylder_psi, SurrogateParams};
pub use dist::{Component, DistributionSpec};
pub use error::{Error, Result};
pub use lundberg::{
    adjustment_coefficient, adjustment_residual, exp_exp_adjustment_closed_form, lundberg_bound,
    martingale_self_test, AdjustmentResult, MartingaleCheck,
};
pub use model::{MixedMoments, RiskModel, SignWarning};
pub use montecarlo::{
    estimate_ruin, hoeffding_n, hoeffding_radius, simulate_path, PathOutcome, SimPlan, SimResult,
    Truncation,
};
pub use table::{ComparisonRow, TableReport};
