//! Distribution families for claim sizes and additional funds.
//!
//! Four light-tailed nonnegative families are supported: exponential, Erlang,
//! hyperexponential (finite mixture of exponentials) and degenerate (point
//! mass). Each exposes closed-form raw moments up to order 3, the moment
//! generating function `E[e^{rY}]` on its open domain, the always-finite
//! negative-exponential moment `E[e^{-rY}]`, and sampling.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// One branch of a hyperexponential mixture: draw an exponential with this
/// `mean` with probability `weight`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub weight: f64,
    pub mean: f64,
}

/// Parametric description of a nonnegative claim-size or fund distribution.
///
/// Specs are immutable after construction and all operations are pure, so a
/// spec can be shared freely across threads. Sampling mutates only the
/// caller-supplied random stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DistributionSpec {
    Exponential { mean: f64 },
    Erlang { shape: u32, mean: f64 },
    Hyperexponential { components: Vec<Component> },
    Degenerate { point: f64 },
}

/// Slack allowed when checking that mixture weights sum to one.
const WEIGHT_SUM_TOL: f64 = 1e-12;

impl DistributionSpec {
    pub fn exponential(mean: f64) -> Result<Self> {
        let spec = DistributionSpec::Exponential { mean };
        spec.validate()?;
        Ok(spec)
    }

    pub fn erlang(shape: u32, mean: f64) -> Result<Self> {
        let spec = DistributionSpec::Erlang { shape, mean };
        spec.validate()?;
        Ok(spec)
    }

    /// Mixture weights are validated, not renormalized: a weight vector that
    /// does not sum to one is rejected.
    pub fn hyperexponential(components: Vec<Component>) -> Result<Self> {
        let spec = DistributionSpec::Hyperexponential { components };
        spec.validate()?;
        Ok(spec)
    }

    pub fn degenerate(point: f64) -> Result<Self> {
        let spec = DistributionSpec::Degenerate { point };
        spec.validate()?;
        Ok(spec)
    }

    /// Check the family parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameters(msg));
        match self {
            DistributionSpec::Exponential { mean } => {
                if !(mean.is_finite() && *mean > 0.0) {
                    return fail(format!("exponential mean must be positive, got {mean}"));
                }
            }
            DistributionSpec::Erlang { shape, mean } => {
                if *shape < 1 {
                    return fail("erlang shape must be >= 1".into());
                }
                if !(mean.is_finite() && *mean > 0.0) {
                    return fail(format!("erlang mean must be positive, got {mean}"));
                }
            }
            DistributionSpec::Hyperexponential { components } => {
                if components.is_empty() {
                    return fail("hyperexponential needs at least one component".into());
                }
                let mut sum = 0.0;
                for c in components {
                    if !(c.weight.is_finite() && c.weight > 0.0) {
                        return fail(format!(
                            "hyperexponential weights must be strictly positive, got {}",
                            c.weight
                        ));
                    }
                    if !(c.mean.is_finite() && c.mean > 0.0) {
                        return fail(format!(
                            "hyperexponential component means must be positive, got {}",
                            c.mean
                        ));
                    }
                    sum += c.weight;
                }
                if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
                    return fail(format!(
                        "hyperexponential weights must sum to 1 within {WEIGHT_SUM_TOL}, got {sum}"
                    ));
                }
            }
            DistributionSpec::Degenerate { point } => {
                if !(point.is_finite() && *point >= 0.0) {
                    return fail(format!("degenerate point must be nonnegative, got {point}"));
                }
            }
        }
        Ok(())
    }

    /// First moment `E[Y]`.
    pub fn mean(&self) -> f64 {
        match self {
            DistributionSpec::Exponential { mean } | DistributionSpec::Erlang { mean, .. } => *mean,
            DistributionSpec::Hyperexponential { components } => {
                components.iter().map(|c| c.weight * c.mean).sum()
            }
            DistributionSpec::Degenerate { point } => *point,
        }
    }

    /// Raw moment `E[Y^order]` for `order` in 1..=3.
    pub fn raw_moment(&self, order: u32) -> Result<f64> {
        if !(1..=3).contains(&order) {
            return Err(Error::UnsupportedOrder(order));
        }
        Ok(match self {
            DistributionSpec::Exponential { mean } => match order {
                1 => *mean,
                2 => 2.0 * mean * mean,
                _ => 6.0 * mean * mean * mean,
            },
            DistributionSpec::Erlang { shape, mean } => {
                // E[Y^m] = k(k+1)...(k+m-1) * (mean/k)^m
                let k = f64::from(*shape);
                match order {
                    1 => *mean,
                    2 => (k + 1.0) * mean * mean / k,
                    _ => (k + 1.0) * (k + 2.0) * mean.powi(3) / (k * k),
                }
            }
            DistributionSpec::Hyperexponential { components } => {
                let factorial = [1.0, 2.0, 6.0][order as usize - 1];
                components
                    .iter()
                    .map(|c| c.weight * factorial * c.mean.powi(order as i32))
                    .sum()
            }
            DistributionSpec::Degenerate { point } => point.powi(order as i32),
        })
    }

    /// Supremum of the open interval on which the MGF is finite
    /// (`+inf` for bounded support).
    pub fn mgf_domain_sup(&self) -> f64 {
        match self {
            DistributionSpec::Exponential { mean } => 1.0 / mean,
            DistributionSpec::Erlang { shape, mean } => f64::from(*shape) / mean,
            DistributionSpec::Hyperexponential { components } => components
                .iter()
                .map(|c| 1.0 / c.mean)
                .fold(f64::INFINITY, f64::min),
            DistributionSpec::Degenerate { .. } => f64::INFINITY,
        }
    }

    /// Moment generating function `E[e^{rY}]` for `0 <= r < mgf_domain_sup`.
    ///
    /// The domain check is strict: the boundary itself is rejected.
    /// `mgf(0)` is 1 exactly, even when mixture weights only sum to one
    /// within the validation slack.
    pub fn mgf(&self, r: f64) -> Result<f64> {
        assert!(r >= 0.0, "mgf argument must be nonnegative, got {r}");
        let sup = self.mgf_domain_sup();
        if r >= sup {
            return Err(Error::OutsideMgfDomain { r, sup });
        }
        if r == 0.0 {
            return Ok(1.0);
        }
        Ok(match self {
            DistributionSpec::Exponential { mean } => 1.0 / (1.0 - mean * r),
            DistributionSpec::Erlang { shape, mean } => {
                let k = f64::from(*shape);
                (k / (k - mean * r)).powi(*shape as i32)
            }
            DistributionSpec::Hyperexponential { components } => components
                .iter()
                .map(|c| c.weight / (1.0 - c.mean * r))
                .sum(),
            DistributionSpec::Degenerate { point } => (r * point).exp(),
        })
    }

    /// Negative-exponential moment `E[e^{-rY}]` for `r >= 0`; always finite
    /// for nonnegative variables, and in (0, 1]. Exactly 1 at `r = 0`.
    pub fn neg_exp_moment(&self, r: f64) -> f64 {
        assert!(
            r >= 0.0,
            "neg_exp_moment argument must be nonnegative, got {r}"
        );
        if r == 0.0 {
            return 1.0;
        }
        match self {
            DistributionSpec::Exponential { mean } => 1.0 / (1.0 + mean * r),
            DistributionSpec::Erlang { shape, mean } => {
                let k = f64::from(*shape);
                (k / (k + mean * r)).powi(*shape as i32)
            }
            DistributionSpec::Hyperexponential { components } => components
                .iter()
                .map(|c| c.weight / (1.0 + c.mean * r))
                .sum(),
            DistributionSpec::Degenerate { point } => (-r * point).exp(),
        }
    }

    /// Draw one value.
    ///
    /// Erlang draws are the sum of `shape` exponentials scaled by
    /// `mean/shape`; hyperexponential draws select a component by weight and
    /// then draw an exponential. The number and order of stream consumptions
    /// is fixed per family, which keeps seeded runs reproducible.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            DistributionSpec::Exponential { mean } => mean * standard_exponential(rng),
            DistributionSpec::Erlang { shape, mean } => {
                let scale = mean / f64::from(*shape);
                (0..*shape).map(|_| scale * standard_exponential(rng)).sum()
            }
            DistributionSpec::Hyperexponential { components } => {
                let u: f64 = rng.gen();
                let mut acc = 0.0;
                let mut chosen = components[components.len() - 1].mean;
                for c in components {
                    acc += c.weight;
                    if u < acc {
                        chosen = c.mean;
                        break;
                    }
                }
                chosen * standard_exponential(rng)
            }
            DistributionSpec::Degenerate { point } => *point,
        }
    }

    /// `ln E[e^{rY}]`, same domain as [`DistributionSpec::mgf`]. Stays
    /// finite deep into ranges where the MGF itself overflows (degenerate
    /// claims at large `r`), which the root solver relies on.
    pub(crate) fn ln_mgf(&self, r: f64) -> Result<f64> {
        let sup = self.mgf_domain_sup();
        if r >= sup {
            return Err(Error::OutsideMgfDomain { r, sup });
        }
        if r == 0.0 {
            return Ok(0.0);
        }
        Ok(match self {
            DistributionSpec::Exponential { mean } => -(1.0 - mean * r).ln(),
            DistributionSpec::Erlang { shape, mean } => {
                let k = f64::from(*shape);
                k * (k / (k - mean * r)).ln()
            }
            DistributionSpec::Hyperexponential { components } => components
                .iter()
                .map(|c| c.weight / (1.0 - c.mean * r))
                .sum::<f64>()
                .ln(),
            DistributionSpec::Degenerate { point } => r * point,
        })
    }

    /// `ln E[e^{-rY}]`, the log-scale companion of
    /// [`DistributionSpec::neg_exp_moment`].
    pub(crate) fn ln_neg_exp_moment(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        match self {
            DistributionSpec::Exponential { mean } => -(1.0 + mean * r).ln(),
            DistributionSpec::Erlang { shape, mean } => {
                let k = f64::from(*shape);
                k * (k / (k + mean * r)).ln()
            }
            DistributionSpec::Hyperexponential { components } => components
                .iter()
                .map(|c| c.weight / (1.0 + c.mean * r))
                .sum::<f64>()
                .ln(),
            DistributionSpec::Degenerate { point } => -r * point,
        }
    }

    /// Infimum of the support.
    pub(crate) fn support_inf(&self) -> f64 {
        match self {
            DistributionSpec::Degenerate { point } => *point,
            _ => 0.0,
        }
    }

    /// Supremum of the support (`+inf` for the exponential-type families).
    pub(crate) fn support_sup(&self) -> f64 {
        match self {
            DistributionSpec::Degenerate { point } => *point,
            _ => f64::INFINITY,
        }
    }
}

/// Unit-mean exponential draw; `1 - U` keeps the argument of `ln` in (0, 1].
pub(crate) fn standard_exponential<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = rng.gen();
    -(1.0 - u).ln()
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistributionSpec::Exponential { mean } => write!(f, "exponential(mean={mean})"),
            DistributionSpec::Erlang { shape, mean } => {
                write!(f, "erlang(shape={shape}, mean={mean})")
            }
            DistributionSpec::Hyperexponential { components } => {
                write!(f, "hyperexponential(")?;
                for (i, c) in components.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}:{}", c.weight, c.mean)?;
                }
                write!(f, ")")
            }
            DistributionSpec::Degenerate { point } => write!(f, "degenerate(point={point})"),
        }
    }
}
