//! Crate-wide error type.

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Construction of a distribution spec, model or plan with invalid parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// `raw_moment` supports orders 1, 2 and 3 only.
    #[error("unsupported moment order {0}; only orders 1..=3 are available")]
    UnsupportedOrder(u32),

    /// The MGF argument is at or beyond the open domain boundary.
    #[error("mgf argument r = {r} is at or beyond the domain boundary (finite for r < {sup})")]
    OutsideMgfDomain { r: f64, sup: f64 },

    /// An operation that requires exponential claim sizes and exponential funds
    /// was called on a different family pair.
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    /// The adjustment equation has no positive root (net profit margin <= 0).
    #[error("no positive root: net profit margin {margin} is not positive")]
    NoPositiveRoot { margin: f64 },

    /// No sign change was found while expanding the root bracket. Carries the
    /// scanned (r, residual) grid for diagnostics.
    #[error("failed to bracket a positive root; scanned {} grid points", scanned.len())]
    BracketingFailed { scanned: Vec<(f64, f64)> },

    /// A positivity gate of the moment-matching map failed, making the
    /// approximation inapplicable to this model.
    #[error("approximation inapplicable: {gate} positivity gate failed (value {value})")]
    GateViolated { gate: &'static str, value: f64 },

    /// Equal claim and fund means make the surrogate mean ratio degenerate.
    #[error("approximation inapplicable: claim mean equals fund mean ({mean})")]
    DegenerateMeanRatio { mean: f64 },

    /// The moment-matching map requires a positive net profit margin.
    #[error("approximation requires a positive net profit margin, got {margin}")]
    NonPositiveMargin { margin: f64 },

    /// Sample-size planning needs a strictly positive accuracy.
    #[error("accuracy epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    /// Config file could not be read.
    #[error("cannot read config: {0}")]
    Io(String),

    /// Config file could not be parsed.
    #[error("cannot parse config: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
