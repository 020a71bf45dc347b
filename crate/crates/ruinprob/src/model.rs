//! The risk model: a surplus process with premium income at a constant rate,
//! compound-Poisson claims, and additional funds credited at each claim epoch.

use serde::Serialize;

use crate::dist::DistributionSpec;
use crate::error::{Error, Result};

/// Immutable model parameters. All operations are pure; the model can be
/// shared across any number of threads.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RiskModel {
    premium_rate: f64,
    claim_intensity: f64,
    claims: DistributionSpec,
    funds: DistributionSpec,
}

/// Second and third raw moments of the net claim-epoch jump `xi - eta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixedMoments {
    pub m2: f64,
    pub m3: f64,
}

/// Raised when one sign of the net jump `xi - eta` provably has probability
/// zero, which puts the model outside the regime the analytic machinery
/// targets: ruin is then either impossible or the model is the classical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignWarning {
    /// `P[xi - eta > 0] = 0`: the surplus never decreases, ruin cannot occur.
    NetJumpNeverPositive,
    /// `P[xi - eta < 0] = 0`: funds never exceed the claim (classical model).
    NetJumpNeverNegative,
}

impl RiskModel {
    /// Validate and build a model. A zero-mean claim distribution is
    /// rejected: without claims the model is degenerate.
    pub fn new(
        premium_rate: f64,
        claim_intensity: f64,
        claims: DistributionSpec,
        funds: DistributionSpec,
    ) -> Result<Self> {
        if !(premium_rate.is_finite() && premium_rate > 0.0) {
            return Err(Error::InvalidParameters(format!(
                "premium rate must be positive, got {premium_rate}"
            )));
        }
        if !(claim_intensity.is_finite() && claim_intensity > 0.0) {
            return Err(Error::InvalidParameters(format!(
                "claim intensity must be positive, got {claim_intensity}"
            )));
        }
        claims.validate()?;
        funds.validate()?;
        if claims.mean() <= 0.0 {
            return Err(Error::InvalidParameters(
                "claim distribution must have positive mean".into(),
            ));
        }
        Ok(RiskModel {
            premium_rate,
            claim_intensity,
            claims,
            funds,
        })
    }

    pub fn premium_rate(&self) -> f64 {
        self.premium_rate
    }

    pub fn claim_intensity(&self) -> f64 {
        self.claim_intensity
    }

    pub fn claims(&self) -> &DistributionSpec {
        &self.claims
    }

    pub fn funds(&self) -> &DistributionSpec {
        &self.funds
    }

    pub fn claim_mean(&self) -> f64 {
        self.claims.mean()
    }

    pub fn fund_mean(&self) -> f64 {
        self.funds.mean()
    }

    /// Net profit margin `c - lambda*mu1 + lambda*mu2`. When it is
    /// nonpositive the ruin probability is identically one and downstream
    /// operations short-circuit accordingly.
    pub fn net_profit_margin(&self) -> f64 {
        self.premium_rate - self.claim_intensity * (self.claim_mean() - self.fund_mean())
    }

    /// Second and third moments of `xi - eta`, expanded from the family raw
    /// moments via the binomial identities; the same two formulas serve every
    /// family pair.
    pub fn mixed_moments(&self) -> MixedMoments {
        let moment = |spec: &DistributionSpec, order: u32| {
            spec.raw_moment(order)
                .expect("orders 1..=3 are always supported")
        };
        let (x1, x2, x3) = (
            self.claims.mean(),
            moment(&self.claims, 2),
            moment(&self.claims, 3),
        );
        let (e1, e2, e3) = (
            self.funds.mean(),
            moment(&self.funds, 2),
            moment(&self.funds, 3),
        );
        MixedMoments {
            m2: x2 - 2.0 * x1 * e1 + e2,
            m3: x3 - 3.0 * x2 * e1 + 3.0 * x1 * e2 - e3,
        }
    }

    /// Detect the provable one-sided cases (support bounds do not overlap).
    pub fn sign_warning(&self) -> Option<SignWarning> {
        if self.claims.support_sup() <= self.funds.support_inf() {
            Some(SignWarning::NetJumpNeverPositive)
        } else if self.claims.support_inf() >= self.funds.support_sup() {
            Some(SignWarning::NetJumpNeverNegative)
        } else {
            None
        }
    }
}
