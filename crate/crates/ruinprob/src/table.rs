//! Side-by-side comparison tables: simulation estimate, moment-matched
//! approximation, exponential bound and (when available) the exact value,
//! over a grid of initial surpluses.

use serde::Serialize;

use crate::closed_form::{self, RuinFunction};
use crate::config::ModelConfig;
use crate::devylder;
use crate::error::Result;
use crate::lundberg;
use crate::montecarlo::{estimate_ruin, hoeffding_n, hoeffding_radius, SimPlan};

/// One grid row. `None` renders as `n/a`: the method is inapplicable to the
/// model or the ratio is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub x: f64,
    pub psi_hat: Option<f64>,
    pub psi_dv: Option<f64>,
    /// `(psi_dv / psi_hat - 1) * 100`.
    pub dv_rel_pct: Option<f64>,
    /// The exponential bound `e^{-r_hat x}`.
    pub lundberg: Option<f64>,
    /// `(e^{-r_hat x} / psi_hat - 1) * 100`.
    pub bound_rel_pct: Option<f64>,
    /// Exact value; present only for exponential/exponential models.
    pub exact: Option<f64>,
}

/// A rendered-ready table plus everything the header block reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub rows: Vec<ComparisonRow>,
    pub model_line: String,
    pub margin: f64,
    pub seed: u64,
    pub n_paths: u64,
    pub epsilon: f64,
    pub delta: f64,
    pub r_hat: Option<f64>,
    pub dv: Option<RuinFunction>,
    pub exact: Option<RuinFunction>,
    pub truncation_note: String,
    /// Reasons for `n/a` columns and model warnings.
    pub notes: Vec<String>,
}

/// Run every method over the config's grid.
///
/// The same seed drives the runs at every grid point, so the paths at
/// different `x` are coupled and the estimated column is monotone the way
/// the true function is. A nonpositive margin short-circuits every
/// probability column to 1.
pub fn build_table(
    config: &ModelConfig,
    paths_override: Option<u64>,
    seed_override: Option<u64>,
) -> Result<TableReport> {
    let model = config.to_model()?;
    let seed = seed_override.unwrap_or(config.mc.seed);
    let n_paths = match paths_override {
        Some(n) => n,
        None => hoeffding_n(config.mc.epsilon, config.mc.delta)?,
    };
    let margin = model.net_profit_margin();
    let model_line = format!(
        "premium_rate={} claim_intensity={} claims={} funds={}",
        model.premium_rate(),
        model.claim_intensity(),
        model.claims(),
        model.funds()
    );
    let mut notes = Vec::new();
    if let Some(warning) = model.sign_warning() {
        notes.push(match warning {
            crate::model::SignWarning::NetJumpNeverPositive => {
                "net jump xi - eta is never positive: ruin cannot occur".into()
            }
            crate::model::SignWarning::NetJumpNeverNegative => {
                "net jump xi - eta is never negative: classical-model regime".into()
            }
        });
    }

    if margin <= 0.0 {
        notes.push(format!(
            "net profit margin {margin} <= 0: ruin is certain at every x"
        ));
        let exact_applicable = closed_form::exact_exponential_ruin(&model).is_ok();
        let rows = config
            .x_grid
            .iter()
            .map(|&x| ComparisonRow {
                x,
                psi_hat: Some(1.0),
                psi_dv: Some(1.0),
                dv_rel_pct: Some(0.0),
                lundberg: Some(1.0),
                bound_rel_pct: Some(0.0),
                exact: exact_applicable.then_some(1.0),
            })
            .collect();
        return Ok(TableReport {
            rows,
            model_line,
            margin,
            seed,
            n_paths: 0,
            epsilon: config.mc.epsilon,
            delta: config.mc.delta,
            r_hat: None,
            dv: None,
            exact: exact_applicable.then(RuinFunction::certain_ruin),
            truncation_note: "none (no paths simulated)".into(),
            notes,
        });
    }

    let r_hat = match lundberg::adjustment_coefficient(&model, lundberg::DEFAULT_TOL) {
        Ok(res) => Some(res.r_hat),
        Err(e) => {
            notes.push(format!("bound column n/a: {e}"));
            None
        }
    };
    let dv = match devylder::devylder_psi(&model) {
        Ok(rf) => Some(rf),
        Err(e) => {
            notes.push(format!("psi_dv column n/a: {e}"));
            None
        }
    };
    // only available for the exponential/exponential pair
    let exact = closed_form::exact_exponential_ruin(&model).ok();

    let truncation_note = if let Some(level) = config.mc.surplus_cap {
        format!("surplus cap at {level}")
    } else if let Some(max_claims) = config.mc.max_claims {
        format!("claim cap at {max_claims}")
    } else if let Some(r) = r_hat {
        format!("surplus cap at x + {:.6}", (1e6f64).ln() / r)
    } else {
        "claim cap at 1000000 (no adjustment coefficient)".into()
    };

    let mut rows = Vec::with_capacity(config.x_grid.len());
    for &x in &config.x_grid {
        let plan = SimPlan::new(n_paths, seed, config.truncation_for(&model, x), x)?;
        let result = estimate_ruin(&model, &plan);
        let psi_hat = Some(result.psi_hat);
        let psi_dv = dv.map(|rf| rf.evaluate(x));
        let bound = r_hat.map(|r| lundberg::lundberg_bound(r, x));
        let rel = |value: Option<f64>| -> Option<f64> {
            match (value, psi_hat) {
                (Some(v), Some(hat)) if hat > 0.0 => Some((v / hat - 1.0) * 100.0),
                _ => None,
            }
        };
        rows.push(ComparisonRow {
            x,
            psi_hat,
            psi_dv,
            dv_rel_pct: rel(psi_dv),
            lundberg: bound,
            bound_rel_pct: rel(bound),
            exact: exact.map(|rf| rf.evaluate(x)),
        });
    }

    Ok(TableReport {
        rows,
        model_line,
        margin,
        seed,
        n_paths,
        epsilon: config.mc.epsilon,
        delta: config.mc.delta,
        r_hat,
        dv,
        exact,
        truncation_note,
        notes,
    })
}

fn fmt_cell(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.6}"),
        None => "n/a".into(),
    }
}

fn fmt_pct(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.2}%"),
        None => "n/a".into(),
    }
}

impl TableReport {
    fn header_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("model: {}", self.model_line),
            format!("net_profit_margin: {}", self.margin),
            format!("seed: {}", self.seed),
            format!("n_paths: {}", self.n_paths),
            format!("epsilon: {}", self.epsilon),
            format!("delta: {}", self.delta),
            format!(
                "hoeffding_radius: {:.6}",
                hoeffding_radius(self.delta, self.n_paths)
            ),
            match self.r_hat {
                Some(r) => format!("r_hat: {r:.6}"),
                None => "r_hat: n/a".into(),
            },
            match &self.dv {
                Some(rf) => format!("psi_dv: {rf}"),
                None => "psi_dv: n/a".into(),
            },
            match &self.exact {
                Some(rf) => format!("exact: {rf}"),
                None => "exact: n/a".into(),
            },
            format!("truncation: {}", self.truncation_note),
        ];
        for note in &self.notes {
            lines.push(format!("note: {note}"));
        }
        lines
    }

    /// Machine-readable rendering: `#`-prefixed header block, then one CSV
    /// row per grid point. Byte-stable for a fixed config and seed.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for line in self.header_lines() {
            out.push_str("# ");
            out.push_str(&line);
            out.push('\n');
        }
        let with_exact = self.exact.is_some();
        out.push_str("x,psi_hat,psi_dv,dv_rel_pct,lundberg,bound_rel_pct");
        if with_exact {
            out.push_str(",exact");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}",
                row.x,
                fmt_cell(row.psi_hat),
                fmt_cell(row.psi_dv),
                fmt_cell(row.dv_rel_pct),
                fmt_cell(row.lundberg),
                fmt_cell(row.bound_rel_pct),
            ));
            if with_exact {
                out.push(',');
                out.push_str(&fmt_cell(row.exact));
            }
            out.push('\n');
        }
        out
    }

    /// Human-readable rendering in the layout of the reference tables.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        for line in self.header_lines() {
            out.push_str(&format!("> {line}\n"));
        }
        out.push('\n');
        let with_exact = self.exact.is_some();
        out.push_str(
            "| x | psi_hat | psi_DV | (psi_DV/psi_hat - 1)*100% | exp(-R x) | (exp(-R x)/psi_hat - 1)*100% |",
        );
        if with_exact {
            out.push_str(" exact |");
        }
        out.push('\n');
        out.push_str("|--:|--------:|-------:|--------------------------:|----------:|-----------------------------:|");
        if with_exact {
            out.push_str("------:|");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |",
                row.x,
                fmt_cell(row.psi_hat),
                fmt_cell(row.psi_dv),
                fmt_pct(row.dv_rel_pct),
                fmt_cell(row.lundberg),
                fmt_pct(row.bound_rel_pct),
            ));
            if with_exact {
                out.push_str(&format!(" {} |", fmt_cell(row.exact)));
            }
            out.push('\n');
        }
        out
    }
}
