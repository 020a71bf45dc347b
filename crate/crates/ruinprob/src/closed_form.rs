//! Exact ruin probability for exponential claims and exponential funds.
//!
//! For that family pair the survival probability has a closed form
//! `phi(x) = 1 + M e^{alpha x}` with `alpha < 0` and `M` in (-1, 0), so the
//! ruin probability is a single decaying exponential. The same evaluation
//! core also serves the moment-matched surrogate of the `devylder` module.

use serde::Serialize;

use crate::dist::DistributionSpec;
use crate::error::{Error, Result};
use crate::model::RiskModel;

/// A ruin probability of the form `psi(x) = coefficient * e^{rate * x}`.
///
/// The degenerate constant-one function (certain ruin, used when the net
/// profit margin is nonpositive) is representable as `coefficient = 1`,
/// `rate = 0` and is flagged by [`RuinFunction::is_certain_ruin`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RuinFunction {
    coefficient: f64,
    rate: f64,
}

impl RuinFunction {
    /// A proper decaying ruin function: `0 < coefficient <= 1`, `rate < 0`.
    pub fn new(coefficient: f64, rate: f64) -> Result<Self> {
        if !(coefficient > 0.0 && coefficient <= 1.0 && coefficient.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "ruin coefficient must lie in (0, 1], got {coefficient}"
            )));
        }
        if !(rate < 0.0 && rate.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "ruin rate must be negative, got {rate}"
            )));
        }
        Ok(RuinFunction { coefficient, rate })
    }

    /// The constant-one ruin function for models with nonpositive margin.
    pub fn certain_ruin() -> Self {
        RuinFunction {
            coefficient: 1.0,
            rate: 0.0,
        }
    }

    pub fn is_certain_ruin(&self) -> bool {
        self.rate == 0.0
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// Evaluate `psi(x) = coefficient * e^{rate x}`.
    ///
    /// Panics on negative `x`; the result always lies in [0, 1] because of
    /// the construction invariants.
    pub fn evaluate(&self, x: f64) -> f64 {
        assert!(x >= 0.0, "initial surplus must be nonnegative, got {x}");
        let value = self.coefficient * (self.rate * x).exp();
        debug_assert!((0.0..=1.0).contains(&value));
        value
    }
}

impl std::fmt::Display for RuinFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_certain_ruin() {
            write!(f, "1 for all x >= 0")
        } else {
            write!(f, "{:.6} * exp({:.6} x)", self.coefficient, self.rate)
        }
    }
}

/// The negative decay exponent `alpha` of the exponential/exponential closed
/// form, in the cancellation-free arrangement.
///
/// The textbook radical subtracts `sqrt(A)` from `lambda*mu1*mu2 + c*(mu1 -
/// mu2)`, which loses digits whenever that numerator is positive and close
/// to `sqrt(A)`; multiplying through by the conjugate replaces the
/// difference with `A - b^2 = 4*c*mu1*mu2*margin`, giving
/// `alpha = -2*margin / (b + sqrt(A))` with an always-positive denominator.
/// This form also stays finite in the `mu2 -> 0` (classical) limit.
pub(crate) fn stable_alpha(c: f64, lambda: f64, mu1: f64, mu2: f64) -> f64 {
    let margin = c - lambda * (mu1 - mu2);
    let b = lambda * mu1 * mu2 + c * (mu1 - mu2);
    let a = c * c * (mu1 * mu1 + mu2 * mu2)
        + (lambda * mu1 * mu2).powi(2)
        + 2.0 * c * mu1 * mu2 * margin;
    -2.0 * margin / (b + a.sqrt())
}

/// Closed-form ruin function from raw exponential/exponential parameters.
/// Requires `margin > 0`, `mu1 > 0`, `mu2 >= 0` (the `mu2 = 0` limit is the
/// classical model and is handled by the same expressions).
pub(crate) fn exp_exp_ruin_raw(c: f64, lambda: f64, mu1: f64, mu2: f64) -> RuinFunction {
    let alpha = stable_alpha(c, lambda, mu1, mu2);
    let one_minus = 1.0 - alpha * mu2;
    let denom = (c * alpha - lambda) * one_minus * (mu1 + mu2) + lambda * mu2;
    let multiplier = lambda * mu1 * one_minus / denom;
    RuinFunction::new(-multiplier, alpha)
        .expect("positive margin puts the multiplier in (-1, 0) and alpha below 0")
}

/// Exact ruin probability when both claim sizes and additional funds are
/// exponential. When the net profit margin is nonpositive the constant-one
/// ruin function is returned instead of an error so tables can still render.
pub fn exact_exponential_ruin(model: &RiskModel) -> Result<RuinFunction> {
    let (mu1, mu2) = match (model.claims(), model.funds()) {
        (
            DistributionSpec::Exponential { mean: mu1 },
            DistributionSpec::Exponential { mean: mu2 },
        ) => (*mu1, *mu2),
        _ => {
            return Err(Error::UnsupportedModel(format!(
                "exact ruin requires exponential claims and funds, got {} / {}",
                model.claims(),
                model.funds()
            )))
        }
    };
    if model.net_profit_margin() <= 0.0 {
        return Ok(RuinFunction::certain_ruin());
    }
    Ok(exp_exp_ruin_raw(
        model.premium_rate(),
        model.claim_intensity(),
        mu1,
        mu2,
    ))
}
