//! Adjustment coefficient and the exponential upper bound `psi(x) <= e^{-R x}`.
//!
//! The adjustment coefficient is the unique positive root of
//!
//! ```text
//! g(R) = lambda * (E[e^{R xi}] * E[e^{-R eta}] - 1) - c R
//! ```
//!
//! inside the open domain of the claim-size MGF. `g` is convex with
//! `g(0) = 0`, negative slope at zero whenever the net profit margin is
//! positive, and diverges at the domain boundary, so bracket expansion toward
//! the boundary followed by bisection finds the root unconditionally. Working
//! on `g` directly (never on rearranged algebraic forms) keeps spurious
//! roots outside the search interval.

use rand::Rng;
use serde::Serialize;

use crate::dist::{standard_exponential, DistributionSpec};
use crate::error::{Error, Result};
use crate::model::RiskModel;

/// Default tolerance on `|g(r_hat)|`.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Root of the adjustment equation together with solver diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjustmentResult {
    /// The adjustment coefficient.
    pub r_hat: f64,
    /// Final bisection bracket containing the root.
    pub bracket: (f64, f64),
    /// `g(r_hat)` at the returned root.
    pub residual: f64,
    /// Number of bisection steps taken.
    pub iterations: u32,
}

/// Sample mean and standard error of `e^{-r U_t}` over simulated copies of
/// the net outflow `U_t = c t - sum(xi_i - eta_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MartingaleCheck {
    pub mean: f64,
    pub std_error: f64,
    pub n: u64,
}

/// Residual of the adjustment equation at `r`. Errors past the claim-MGF
/// domain boundary.
///
/// The product of the two exponential moments is formed in log scale: for
/// degenerate claims the MGF factor overflows long before the product does,
/// and `inf * 0` would poison the bracketing with NaN.
pub fn adjustment_residual(model: &RiskModel, r: f64) -> Result<f64> {
    let ln_product = model.claims().ln_mgf(r)? + model.funds().ln_neg_exp_moment(r);
    Ok(model.claim_intensity() * ln_product.exp_m1() - model.premium_rate() * r)
}

/// Residual for bracketing: domain errors and overflow count as +inf.
fn residual_or_inf(model: &RiskModel, r: f64) -> f64 {
    match adjustment_residual(model, r) {
        Ok(v) if v.is_finite() => v,
        _ => f64::INFINITY,
    }
}

/// Solve for the adjustment coefficient to tolerance `tol` on `|g|`.
///
/// Errors with [`Error::NoPositiveRoot`] when the net profit margin is
/// nonpositive and with [`Error::BracketingFailed`] (carrying the scanned
/// grid) when no sign change exists inside the domain — e.g. when the net
/// jump `xi - eta` is never positive and ruin is impossible.
pub fn adjustment_coefficient(model: &RiskModel, tol: f64) -> Result<AdjustmentResult> {
    assert!(tol > 0.0, "tolerance must be positive, got {tol}");
    let margin = model.net_profit_margin();
    if margin <= 0.0 {
        return Err(Error::NoPositiveRoot { margin });
    }

    let sup = model.claims().mgf_domain_sup();
    let mut scanned = Vec::new();
    let mut hi = None;
    if sup.is_finite() {
        // approach the boundary geometrically, stopping at (1 - 1e-9) * sup
        for k in 1..=29 {
            let r = sup * (1.0 - 0.5f64.powi(k));
            let g = residual_or_inf(model, r);
            scanned.push((r, g));
            if g > 0.0 {
                hi = Some(r);
                break;
            }
        }
        if hi.is_none() {
            let r = sup * (1.0 - 1e-9);
            let g = residual_or_inf(model, r);
            scanned.push((r, g));
            if g > 0.0 {
                hi = Some(r);
            }
        }
    } else {
        // unbounded domain (degenerate claims): plain doubling
        let mut r = 1.0 / model.claim_mean();
        for _ in 0..64 {
            let g = residual_or_inf(model, r);
            scanned.push((r, g));
            if g > 0.0 {
                hi = Some(r);
                break;
            }
            r *= 2.0;
        }
    }
    let mut hi = hi.ok_or(Error::BracketingFailed { scanned })?;

    // g(lo) <= 0 < g(hi) throughout; g(0) = 0 makes lo = 0 a valid start.
    let mut lo = 0.0f64;
    let mut iterations = 0u32;
    let mut root = 0.5 * (lo + hi);
    let mut residual = residual_or_inf(model, root);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let g = residual_or_inf(model, mid);
        iterations += 1;
        if g.is_finite() {
            root = mid;
            residual = g;
            if g.abs() <= tol {
                break;
            }
        }
        if g > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    Ok(AdjustmentResult {
        r_hat: root,
        bracket: (lo, hi),
        residual,
        iterations,
    })
}

/// Closed-form adjustment coefficient for exponential claims and exponential
/// funds, via the explicit radical (in the same cancellation-free form as the
/// exact ruin exponent, of which it is the negative).
pub fn exp_exp_adjustment_closed_form(model: &RiskModel) -> Result<f64> {
    let (mu1, mu2) = match (model.claims(), model.funds()) {
        (
            DistributionSpec::Exponential { mean: mu1 },
            DistributionSpec::Exponential { mean: mu2 },
        ) => (*mu1, *mu2),
        _ => {
            return Err(Error::UnsupportedModel(format!(
                "closed-form adjustment coefficient requires exponential claims and funds, \
                 got {} / {}",
                model.claims(),
                model.funds()
            )))
        }
    };
    let margin = model.net_profit_margin();
    if margin <= 0.0 {
        return Err(Error::NoPositiveRoot { margin });
    }
    let r =
        -crate::closed_form::stable_alpha(model.premium_rate(), model.claim_intensity(), mu1, mu2);
    debug_assert!(r > 0.0 && r < 1.0 / mu1);
    Ok(r)
}

/// The exponential upper bound `e^{-r_hat x}` on the ruin probability.
pub fn lundberg_bound(r_hat: f64, x: f64) -> f64 {
    assert!(
        r_hat > 0.0,
        "adjustment coefficient must be positive, got {r_hat}"
    );
    assert!(x >= 0.0, "initial surplus must be nonnegative, got {x}");
    (-r_hat * x).exp()
}

/// Statistical check of the exponential-martingale identity: simulates `n`
/// independent copies of `U_t` over the horizon and returns the sample mean
/// and standard error of `e^{-r U_t}`.
///
/// When `r` solves the adjustment equation the true mean is exactly 1; for
/// any other `r` it is `exp(t * g(r))`, so the same routine doubles as a
/// self-test of the solver and of the residual formula.
pub fn martingale_self_test<R: Rng + ?Sized>(
    model: &RiskModel,
    r: f64,
    horizon: f64,
    n: u64,
    rng: &mut R,
) -> MartingaleCheck {
    assert!(horizon > 0.0, "horizon must be positive, got {horizon}");
    assert!(n >= 1, "need at least one replication");
    let c = model.premium_rate();
    let lambda = model.claim_intensity();
    // Welford running moments
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..n {
        let mut u = c * horizon;
        let mut time = standard_exponential(rng) / lambda;
        while time <= horizon {
            u -= model.claims().sample(rng) - model.funds().sample(rng);
            time += standard_exponential(rng) / lambda;
        }
        let v = (-r * u).exp();
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let std_error = if n > 1 {
        (m2 / ((n - 1) as f64 * n as f64)).sqrt()
    } else {
        0.0
    };
    MartingaleCheck { mean, std_error, n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::Component;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn exp(mean: f64) -> DistributionSpec {
        DistributionSpec::exponential(mean).unwrap()
    }

    fn erl(k: u32, mean: f64) -> DistributionSpec {
        DistributionSpec::erlang(k, mean).unwrap()
    }

    fn deg(p: f64) -> DistributionSpec {
        DistributionSpec::degenerate(p).unwrap()
    }

    fn hyper(parts: &[(f64, f64)]) -> DistributionSpec {
        DistributionSpec::hyperexponential(
            parts
                .iter()
                .map(|&(weight, mean)| Component { weight, mean })
                .collect(),
        )
        .unwrap()
    }

    fn erlang_model() -> RiskModel {
        RiskModel::new(10.0, 4.0, erl(3, 2.0), erl(2, 0.5)).unwrap()
    }

    fn hyper_model() -> RiskModel {
        RiskModel::new(
            10.0,
            4.0,
            hyper(&[(0.4, 0.5), (0.3, 2.0), (0.3, 4.0)]),
            hyper(&[(0.75, 0.4), (0.25, 0.8)]),
        )
        .unwrap()
    }

    fn exp_deg_model() -> RiskModel {
        RiskModel::new(10.0, 4.0, exp(2.0), deg(0.5)).unwrap()
    }

    // ── adjustment_coefficient ──────────────────────────────────────────

    #[test]
    fn erlang_pair_root() {
        let res = adjustment_coefficient(&erlang_model(), DEFAULT_TOL).unwrap();
        assert!(
            (res.r_hat - 0.349_093_202_541).abs() < 1e-9,
            "r_hat={}",
            res.r_hat
        );
        assert!(res.residual.abs() < DEFAULT_TOL);
        assert!(res.r_hat < erlang_model().claims().mgf_domain_sup());
    }

    #[test]
    fn hyperexponential_pair_root() {
        let res = adjustment_coefficient(&hyper_model(), DEFAULT_TOL).unwrap();
        assert!(
            (res.r_hat - 0.110_607_054_334).abs() < 1e-9,
            "r_hat={}",
            res.r_hat
        );
    }

    #[test]
    fn exponential_degenerate_root() {
        let res = adjustment_coefficient(&exp_deg_model(), DEFAULT_TOL).unwrap();
        assert!(
            (res.r_hat - 0.195_273_247_006).abs() < 1e-9,
            "r_hat={}",
            res.r_hat
        );
    }

    #[test]
    fn nonpositive_margin_has_no_positive_root() {
        let model = RiskModel::new(1.0, 4.0, exp(2.0), exp(0.5)).unwrap();
        assert_eq!(
            adjustment_coefficient(&model, DEFAULT_TOL),
            Err(Error::NoPositiveRoot { margin: -5.0 })
        );
    }

    #[test]
    fn never_positive_net_jump_fails_bracketing_with_grid() {
        // degenerate claims below degenerate funds: ruin impossible, g < 0 everywhere
        let model = RiskModel::new(10.0, 4.0, deg(1.0), deg(2.0)).unwrap();
        match adjustment_coefficient(&model, DEFAULT_TOL) {
            Err(Error::BracketingFailed { scanned }) => assert!(!scanned.is_empty()),
            other => panic!("expected bracketing failure, got {other:?}"),
        }
    }

    #[test]
    fn residual_is_exactly_zero_at_origin() {
        for model in [erlang_model(), hyper_model(), exp_deg_model()] {
            assert_eq!(adjustment_residual(&model, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn residual_is_convex_across_the_bracket() {
        for model in [erlang_model(), hyper_model(), exp_deg_model()] {
            let res = adjustment_coefficient(&model, DEFAULT_TOL).unwrap();
            let hi = (2.0 * res.r_hat).min(0.999 * model.claims().mgf_domain_sup());
            let n = 100;
            let vals: Vec<f64> = (0..=n)
                .map(|i| adjustment_residual(&model, hi * i as f64 / n as f64).unwrap())
                .collect();
            for w in vals.windows(3) {
                assert!(w[2] - 2.0 * w[1] + w[0] >= -1e-9);
            }
        }
    }

    // ── closed form vs generic solver ───────────────────────────────────

    #[test]
    fn closed_form_matches_radical_and_solver() {
        let model = RiskModel::new(10.0, 4.0, exp(2.0), exp(0.5)).unwrap();
        let closed = exp_exp_adjustment_closed_form(&model).unwrap();
        assert!((closed - (521.0f64.sqrt() - 19.0) / 20.0).abs() < 1e-12);
        let solved = adjustment_coefficient(&model, DEFAULT_TOL).unwrap().r_hat;
        assert!(
            (closed - solved).abs() < 1e-10,
            "closed={closed} solved={solved}"
        );
    }

    /// Independent oracle for the exponential/exponential case: bisection on
    /// the cubic's quadratic factor `c mu1 mu2 R^2 + (lambda mu1 mu2 + c mu1
    /// - c mu2) R - margin = 0`.
    #[test]
    fn closed_form_matches_cubic_bisection_oracle() {
        let (c, lambda, mu1, mu2) = (10.0f64, 4.0f64, 2.0f64, 0.5f64);
        let margin = c - lambda * (mu1 - mu2);
        let f =
            |r: f64| c * mu1 * mu2 * r * r + (lambda * mu1 * mu2 + c * mu1 - c * mu2) * r - margin;
        let (mut lo, mut hi) = (0.0f64, 1.0 / mu1);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let model = RiskModel::new(c, lambda, exp(mu1), exp(mu2)).unwrap();
        let closed = exp_exp_adjustment_closed_form(&model).unwrap();
        assert!(
            (closed - oracle).abs() < 1e-12,
            "closed={closed} oracle={oracle}"
        );
    }

    #[test]
    fn closed_form_rejects_nonpositive_margin_and_wrong_families() {
        let negative = RiskModel::new(1.0, 4.0, exp(2.0), exp(0.5)).unwrap();
        assert!(matches!(
            exp_exp_adjustment_closed_form(&negative),
            Err(Error::NoPositiveRoot { .. })
        ));
        assert!(matches!(
            exp_exp_adjustment_closed_form(&erlang_model()),
            Err(Error::UnsupportedModel(_))
        ));
    }

    /// For degenerate funds the solver root must agree with direct bisection
    /// on the specialized form `lambda e^{-mu2 R} = -c mu1 R^2 + (c - lambda
    /// mu1) R + lambda`.
    #[test]
    fn degenerate_funds_agree_with_specialized_equation() {
        let (c, lambda, mu1, mu2) = (10.0f64, 4.0f64, 2.0f64, 0.5f64);
        let f = |r: f64| {
            lambda * (-mu2 * r).exp() - (-c * mu1 * r * r + (c - lambda * mu1) * r + lambda)
        };
        // root in (0, 1/mu1); f < 0 between the trivial root at 0 and r_hat
        let (mut lo, mut hi) = (0.0f64, 1.0 / mu1 - 1e-12);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let solved = adjustment_coefficient(&exp_deg_model(), DEFAULT_TOL)
            .unwrap()
            .r_hat;
        assert!(
            (solved - oracle).abs() < 1e-10,
            "solved={solved} oracle={oracle}"
        );
    }

    // ── lundberg_bound ──────────────────────────────────────────────────

    #[test]
    fn bound_reference_values() {
        assert!((lundberg_bound(0.349093, 2.0) - 0.497487).abs() < 1e-6);
        assert!((lundberg_bound(0.195273, 10.0) - 0.141886).abs() < 1e-6);
        assert_eq!(lundberg_bound(0.7, 0.0), 1.0);
    }

    #[test]
    fn bound_dominates_exact_ruin_with_constant_ratio() {
        let model = RiskModel::new(10.0, 4.0, exp(2.0), exp(0.5)).unwrap();
        let rf = crate::closed_form::exact_exponential_ruin(&model).unwrap();
        let r_hat = exp_exp_adjustment_closed_form(&model).unwrap();
        let base_ratio = rf.evaluate(0.0) / lundberg_bound(r_hat, 0.0);
        for i in 0..=20 {
            let x = i as f64;
            let exact = rf.evaluate(x);
            let bound = lundberg_bound(r_hat, x);
            assert!(exact <= bound);
            assert!((exact / bound - base_ratio).abs() < 1e-9);
        }
    }

    // ── martingale self-test ────────────────────────────────────────────

    #[test]
    fn martingale_mean_is_one_at_the_root() {
        let model = erlang_model();
        let r_hat = adjustment_coefficient(&model, DEFAULT_TOL).unwrap().r_hat;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let check = martingale_self_test(&model, r_hat, 1.0, 200_000, &mut rng);
        assert!(
            (check.mean - 1.0).abs() < 5.0 * check.std_error,
            "mean={} se={}",
            check.mean,
            check.std_error
        );
    }

    #[test]
    fn martingale_mean_is_exactly_one_at_r_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let check = martingale_self_test(&erlang_model(), 0.0, 1.0, 1_000, &mut rng);
        assert_eq!(check.mean, 1.0);
        assert_eq!(check.std_error, 0.0);
    }

    #[test]
    fn perturbed_rate_matches_the_exponent_formula() {
        let model = erlang_model();
        let r_hat = adjustment_coefficient(&model, DEFAULT_TOL).unwrap().r_hat;
        // E[e^{-r U_t}] = exp(t * g(r)) for any r inside the domain. The
        // perturbation stays below the root: the estimator's variance is
        // exp(g(2r)) - exp(2 g(r)), which explodes once 2r runs past the
        // root toward the domain boundary, and the sample mean stops being
        // a usable statistic (upward perturbations of 1.5x are already
        // hopeless for this model).
        let r = 0.75 * r_hat;
        let expected = adjustment_residual(&model, r).unwrap().exp();
        assert!(expected < 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let check = martingale_self_test(&model, r, 1.0, 400_000, &mut rng);
        assert!(
            (check.mean - expected).abs() < 5.0 * check.std_error,
            "mean={} expected={expected} se={}",
            check.mean,
            check.std_error
        );
    }
}
