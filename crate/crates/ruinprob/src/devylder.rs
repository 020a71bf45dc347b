//! Moment-matched exponential/exponential surrogate (a De Vylder-style
//! approximation).
//!
//! Any admissible model is mapped to an exponential/exponential one whose
//! net-outflow process matches the original in its first three moments, with
//! the claim/fund mean ratio preserved as the closing fourth condition. The
//! surrogate's exact ruin function then serves as an approximation for the
//! original model.

use serde::Serialize;

use crate::closed_form::{exp_exp_ruin_raw, RuinFunction};
use crate::error::{Error, Result};
use crate::model::RiskModel;

/// Parameters of the moment-matched exponential/exponential surrogate.
///
/// `fund_mean` is zero exactly when the original fund distribution is the
/// zero point mass; the map then reduces to the classical three-parameter
/// matching (same formulas, evaluated at `mu2 = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurrogateParams {
    pub premium_rate: f64,
    pub claim_intensity: f64,
    pub claim_mean: f64,
    pub fund_mean: f64,
}

impl SurrogateParams {
    /// Net profit margin of the surrogate; equals the original margin by the
    /// first moment-match equation.
    pub fn net_profit_margin(&self) -> f64 {
        self.premium_rate - self.claim_intensity * (self.claim_mean - self.fund_mean)
    }
}

/// Map a model to its moment-matched surrogate.
///
/// Fails when the net profit margin is nonpositive, when the claim and fund
/// means coincide (the mean-ratio condition degenerates), or when one of the
/// two positivity gates rejects the model: the surrogate claim mean and the
/// surrogate premium rate must both come out positive for the surrogate to
/// be a valid risk model.
pub fn devylder_params(model: &RiskModel) -> Result<SurrogateParams> {
    let margin = model.net_profit_margin();
    if margin <= 0.0 {
        return Err(Error::NonPositiveMargin { margin });
    }
    let mu1 = model.claim_mean();
    let mu2 = model.fund_mean();
    if mu1 == mu2 {
        return Err(Error::DegenerateMeanRatio { mean: mu1 });
    }
    let mm = model.mixed_moments();
    let (m2, m3) = (mm.m2, mm.m3);
    let p2 = mu1 * mu1 - mu1 * mu2 + mu2 * mu2;
    let p3 = mu1.powi(3) - mu1 * mu1 * mu2 + mu1 * mu2 * mu2 - mu2.powi(3);

    // positivity gate for the surrogate means
    let gate = p3 * m3;
    if gate.is_nan() || gate <= 0.0 {
        return Err(Error::GateViolated {
            gate: "surrogate claim mean",
            value: gate,
        });
    }

    let claim_mean = mu1 * p2 * m3 / (3.0 * p3 * m2);
    let fund_mean = mu2 * p2 * m3 / (3.0 * p3 * m2);
    let claim_intensity =
        9.0 * model.claim_intensity() * p3 * p3 * m2.powi(3) / (2.0 * p2.powi(3) * m3 * m3);
    let premium_rate = model.premium_rate()
        - model.claim_intensity() * (mu1 - mu2) * (1.0 - 3.0 * p3 * m2 * m2 / (2.0 * p2 * p2 * m3));

    // positivity gate for the surrogate premium rate
    if premium_rate.is_nan() || premium_rate <= 0.0 {
        return Err(Error::GateViolated {
            gate: "surrogate premium rate",
            value: premium_rate,
        });
    }
    Ok(SurrogateParams {
        premium_rate,
        claim_intensity,
        claim_mean,
        fund_mean,
    })
}

/// Approximate ruin function: the exact exponential/exponential ruin function
/// of the surrogate, evaluated by the same closed-form core as
/// [`crate::closed_form::exact_exponential_ruin`].
///
/// A nonpositive margin yields the constant-one ruin function (as in the
/// exact module) so that tables can still be rendered.
pub fn devylder_psi(model: &RiskModel) -> Result<RuinFunction> {
    if model.net_profit_margin() <= 0.0 {
        return Ok(RuinFunction::certain_ruin());
    }
    let p = devylder_params(model)?;
    Ok(exp_exp_ruin_raw(
        p.premium_rate,
        p.claim_intensity,
        p.claim_mean,
        p.fund_mean,
    ))
}
