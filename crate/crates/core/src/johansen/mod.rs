//! Johansen reduced-rank regression and cointegration rank tests.
//!
//! Δy_t is regressed on its own lags and the unrestricted deterministic
//! terms, as is y_{t−1} augmented by any restricted deterministic term. With
//! the residual moment matrices S00, S01, S11 the eigenvalues solve
//! `|λ S11 − S10 S00⁻¹ S01| = 0`. The problem is reduced to a symmetric one
//! through the Cholesky factor of S11, so the eigenvectors come out with
//! `βᵀ S11 β = I`.

mod pvalue;
mod tables;

use std::fmt::Write as _;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

pub use pvalue::{critical_value, johansen_pvalue, JohansenTest, MAX_TRENDS};

use crate::error::{Error, Result};
use crate::linalg::{cholesky_checked, hstack, symmetrize};
use crate::linreg::residualize;
use crate::series::{lag_design, Dataset, LagDesign};

/// Placement of constants and trends relative to the cointegrating relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetCase {
    /// No deterministic terms.
    None,
    /// Constant inside the cointegrating relation only.
    RestrictedConstant,
    /// Unrestricted constant, no trend in the relation.
    #[default]
    UnrestrictedConstant,
    /// Unrestricted constant, trend inside the relation.
    RestrictedTrend,
    /// Unrestricted constant and trend.
    UnrestrictedTrend,
}

impl DetCase {
    /// Conventional case number, 1 through 5.
    pub fn number(self) -> usize {
        match self {
            DetCase::None => 1,
            DetCase::RestrictedConstant => 2,
            DetCase::UnrestrictedConstant => 3,
            DetCase::RestrictedTrend => 4,
            DetCase::UnrestrictedTrend => 5,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DetCase::None => "no deterministic terms",
            DetCase::RestrictedConstant => "restricted constant",
            DetCase::UnrestrictedConstant => "unrestricted constant",
            DetCase::RestrictedTrend => "restricted trend",
            DetCase::UnrestrictedTrend => "unrestricted trend",
        }
    }

    /// Name of the deterministic term appended to the levels block, if any.
    pub fn restricted_term(self) -> Option<&'static str> {
        match self {
            DetCase::RestrictedConstant => Some("const"),
            DetCase::RestrictedTrend => Some("trend"),
            _ => None,
        }
    }

    /// Number of unrestricted deterministic regressors.
    pub fn n_unrestricted(self) -> usize {
        match self {
            DetCase::None | DetCase::RestrictedConstant => 0,
            DetCase::UnrestrictedConstant | DetCase::RestrictedTrend => 1,
            DetCase::UnrestrictedTrend => 2,
        }
    }

    pub fn has_intercept(self) -> bool {
        self.n_unrestricted() > 0
    }
}

/// Value of the restricted term for a row at time index `t`.
pub(crate) fn restricted_value(case: DetCase, t: usize) -> Option<f64> {
    match case {
        DetCase::RestrictedConstant => Some(1.0),
        DetCase::RestrictedTrend => Some(t as f64),
        _ => None,
    }
}

/// Unrestricted deterministic columns for the rows of a lag design.
pub(crate) fn unrestricted_block(case: DetCase, ld: &LagDesign) -> DMatrix<f64> {
    let rows = ld.rows();
    match case.n_unrestricted() {
        0 => DMatrix::zeros(rows, 0),
        1 => ld.intercept.clone(),
        _ => DMatrix::from_fn(rows, 2, |i, c| if c == 0 { 1.0 } else { ld.time_index[i] as f64 }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankTestRow {
    /// Hypothesized number of cointegrating relations (at most).
    pub rank: usize,
    pub eigenvalue: f64,
    pub statistic: f64,
    pub critical_value_5pct: f64,
    pub p_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JohansenResult {
    pub variables: Vec<String>,
    /// Row labels of `beta`: the variables, then any restricted term.
    pub beta_labels: Vec<String>,
    /// Descending, each in [0, 1).
    pub eigenvalues: Vec<f64>,
    pub trace_rows: Vec<RankTestRow>,
    pub max_eigen_rows: Vec<RankTestRow>,
    /// Cointegrating vectors as columns, normalized by βᵀS11β = I.
    pub beta: Vec<Vec<f64>>,
    /// Loadings α = S01 β, one column per eigenvalue.
    pub alpha: Vec<Vec<f64>>,
    pub selected_rank: usize,
    pub significance: f64,
    pub det_case: DetCase,
    pub lags: usize,
    pub t_effective: usize,
}

impl JohansenResult {
    pub fn k(&self) -> usize {
        self.variables.len()
    }

    /// Column `j` of β.
    pub fn beta_column(&self, j: usize) -> Vec<f64> {
        self.beta.iter().map(|row| row[j]).collect()
    }

    pub fn beta_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.beta.len(), self.k(), |i, j| self.beta[i][j])
    }
}

/// Eigen part of the reduced-rank regression.
#[derive(Debug, Clone)]
pub struct ReducedRank {
    pub eigenvalues: Vec<f64>,
    /// k1×k, k1 = k plus any restricted term.
    pub beta: DMatrix<f64>,
    /// k×k.
    pub alpha: DMatrix<f64>,
    pub s00: DMatrix<f64>,
    pub s01: DMatrix<f64>,
    pub s11: DMatrix<f64>,
    pub t_effective: usize,
}

/// Solves the Johansen eigenproblem for a VAR(p) in levels.
pub fn reduced_rank_regression(d: &Dataset, p: usize, case: DetCase) -> Result<ReducedRank> {
    let k = d.k();
    let needed = k + case.n_unrestricted() + k * p.saturating_sub(1) + 2;
    if p == 0 || d.t() < needed + p {
        return Err(Error::SeriesTooShort {
            needed: needed + p,
            got: d.t(),
        });
    }
    let ld = lag_design(d, p)?;
    let n = ld.rows();
    let z1 = match restricted_value(case, 0) {
        Some(_) => {
            let extra = DMatrix::from_fn(n, 1, |i, _| restricted_value(case, ld.time_index[i]).unwrap());
            hstack(&[&ld.lagged_levels, &extra])
        }
        None => ld.lagged_levels.clone(),
    };
    let z2 = hstack(&[&ld.lagged_diffs, &unrestricted_block(case, &ld)]);
    let singular = |e: Error| match e {
        Error::RankDeficient => Error::SingularMomentMatrix,
        other => other,
    };
    let r0 = residualize(&z2, &ld.dy).map_err(singular)?;
    let r1 = residualize(&z2, &z1).map_err(singular)?;
    let nf = n as f64;
    let s00 = symmetrize(&(r0.transpose() * &r0 / nf));
    let s01 = r0.transpose() * &r1 / nf;
    let s11 = symmetrize(&(r1.transpose() * &r1 / nf));

    let c00 = cholesky_checked(&s00).ok_or(Error::SingularMomentMatrix)?;
    let l11 = cholesky_checked(&s11).ok_or(Error::SingularMomentMatrix)?.l();
    // C = L11⁻¹ S10 S00⁻¹ S01 L11⁻ᵀ
    let a = l11
        .solve_lower_triangular(&s01.transpose())
        .ok_or(Error::SingularMomentMatrix)?;
    let s00_inv_a_t = c00.solve(&a.transpose());
    let c = symmetrize(&(&a * s00_inv_a_t));
    let eig = SymmetricEigen::new(c);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    order.truncate(k);

    let eigenvalues: Vec<f64> = order
        .iter()
        .map(|&i| eig.eigenvalues[i].clamp(0.0, 1.0 - f64::EPSILON))
        .collect();
    let v = DMatrix::from_fn(eig.eigenvectors.nrows(), k, |r, c| eig.eigenvectors[(r, order[c])]);
    let beta = l11
        .transpose()
        .solve_upper_triangular(&v)
        .ok_or(Error::SingularMomentMatrix)?;
    let alpha = &s01 * &beta;
    Ok(ReducedRank {
        eigenvalues,
        beta,
        alpha,
        s00,
        s01,
        s11,
        t_effective: n,
    })
}

/// −T Σ_{i>r} ln(1 − λ_i).
pub fn trace_statistic(eigenvalues: &[f64], t_effective: usize, r: usize) -> Result<f64> {
    if r >= eigenvalues.len() {
        return Err(Error::RankOutOfRange {
            rank: r,
            k: eigenvalues.len(),
        });
    }
    let t = t_effective as f64;
    Ok(-t * eigenvalues[r..].iter().map(|l| (1.0 - l).ln()).sum::<f64>())
}

/// −T ln(1 − λ_{r+1}).
pub fn max_eigen_statistic(eigenvalues: &[f64], t_effective: usize, r: usize) -> Result<f64> {
    if r >= eigenvalues.len() {
        return Err(Error::RankOutOfRange {
            rank: r,
            k: eigenvalues.len(),
        });
    }
    Ok(-(t_effective as f64) * (1.0 - eigenvalues[r]).ln())
}

/// Ranks selected by sequential testing at one significance level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankDecision {
    pub trace_rank: usize,
    pub max_eigen_rank: usize,
    pub significance: f64,
    pub table: String,
}

/// First rank whose p-value exceeds `alpha`, or `rows.len()` when every test rejects.
pub fn sequential_rank(p_values: &[f64], alpha: f64) -> usize {
    p_values.iter().position(|&p| p > alpha).unwrap_or(p_values.len())
}

fn rank_label(r: usize, rejected: bool) -> String {
    let base = if r == 0 { "None".to_string() } else { format!("At most {r}") };
    if rejected {
        format!("{base}*")
    } else {
        base
    }
}

/// Sequential trace and max-eigen rank decisions with a rendered table.
pub fn rank_decision(result: &JohansenResult, alpha: f64) -> RankDecision {
    let trace_p: Vec<f64> = result.trace_rows.iter().map(|r| r.p_value).collect();
    let max_p: Vec<f64> = result.max_eigen_rows.iter().map(|r| r.p_value).collect();
    let trace_rank = sequential_rank(&trace_p, alpha);
    let max_eigen_rank = sequential_rank(&max_p, alpha);

    let mut table = String::new();
    let _ = writeln!(
        table,
        "{:<14}{:>12}{:>14}{:>12}{:>12}{:>16}{:>12}{:>12}",
        "Rank", "Eigenvalue", "Trace stat", "5% CV", "p-value", "Max-Eigen stat", "5% CV", "p-value"
    );
    for (t, m) in result.trace_rows.iter().zip(&result.max_eigen_rows) {
        let _ = writeln!(
            table,
            "{:<14}{:>12.6}{:>14.6}{:>12.6}{:>12.6}{:>16.6}{:>12.6}{:>12.6}",
            rank_label(t.rank, t.p_value <= alpha),
            t.eigenvalue,
            t.statistic,
            t.critical_value_5pct,
            t.p_value,
            m.statistic,
            m.critical_value_5pct,
            m.p_value
        );
    }
    let _ = writeln!(
        table,
        "Trace test indicates {trace_rank} cointegrating equation(s); max-eigen test indicates {max_eigen_rank} at the {}% level.",
        crate::percent_label(alpha)
    );
    let _ = write!(
        table,
        "* denotes rejection of the hypothesis at the {}% level",
        crate::percent_label(alpha)
    );
    RankDecision {
        trace_rank,
        max_eigen_rank,
        significance: alpha,
        table,
    }
}

/// Full Johansen analysis at the 5% level.
pub fn johansen(d: &Dataset, p: usize, case: DetCase) -> Result<JohansenResult> {
    johansen_at(d, p, case, 0.05)
}

/// Full Johansen analysis; `selected_rank` uses the trace test at `alpha`.
pub fn johansen_at(d: &Dataset, p: usize, case: DetCase, alpha: f64) -> Result<JohansenResult> {
    let k = d.k();
    if k > MAX_TRENDS {
        return Err(Error::DimensionUnsupported(k));
    }
    let rr = reduced_rank_regression(d, p, case)?;
    let t = rr.t_effective;
    let mut trace_rows = Vec::with_capacity(k);
    let mut max_eigen_rows = Vec::with_capacity(k);
    for r in 0..k {
        let trends = k - r;
        let tr = trace_statistic(&rr.eigenvalues, t, r)?;
        let mx = max_eigen_statistic(&rr.eigenvalues, t, r)?;
        trace_rows.push(RankTestRow {
            rank: r,
            eigenvalue: rr.eigenvalues[r],
            statistic: tr,
            critical_value_5pct: critical_value(trends, case, JohansenTest::Trace, 0.05)?.unwrap_or(f64::NAN),
            p_value: johansen_pvalue(tr, trends, case, JohansenTest::Trace)?,
        });
        max_eigen_rows.push(RankTestRow {
            rank: r,
            eigenvalue: rr.eigenvalues[r],
            statistic: mx,
            critical_value_5pct: critical_value(trends, case, JohansenTest::MaxEigen, 0.05)?.unwrap_or(f64::NAN),
            p_value: johansen_pvalue(mx, trends, case, JohansenTest::MaxEigen)?,
        });
    }
    let trace_p: Vec<f64> = trace_rows.iter().map(|r| r.p_value).collect();
    let variables: Vec<String> = d.names().iter().map(|s| s.to_string()).collect();
    let mut beta_labels = variables.clone();
    if let Some(term) = case.restricted_term() {
        beta_labels.push(term.to_string());
    }
    let to_rows = |m: &DMatrix<f64>| (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect();
    Ok(JohansenResult {
        variables,
        beta_labels,
        eigenvalues: rr.eigenvalues.clone(),
        trace_rows,
        max_eigen_rows,
        beta: to_rows(&rr.beta),
        alpha: to_rows(&rr.alpha),
        selected_rank: sequential_rank(&trace_p, alpha),
        significance: alpha,
        det_case: case,
        lags: p,
        t_effective: t,
    })
}

/// A cointegrating relation solved for one variable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LongRunEquation {
    pub normalized_on: String,
    /// Right-hand-side terms `(name, coefficient)`.
    pub coefficients: Vec<(String, f64)>,
    pub rendering: String,
}

/// Renders `lhs = c1 * x1 + c2 * x2 - c3 * x3` with six decimals.
pub fn render_equation(lhs: &str, terms: &[(String, f64)]) -> String {
    let mut out = format!("{lhs} =");
    for (i, (name, c)) in terms.iter().enumerate() {
        if i == 0 {
            let _ = write!(out, " {c:.6} * {name}");
        } else if *c < 0.0 {
            let _ = write!(out, " - {:.6} * {name}", -c);
        } else {
            let _ = write!(out, " + {c:.6} * {name}");
        }
    }
    out
}

/// Normalizes a β column on variable `on` and moves the other terms across.
pub fn normalize_vector(labels: &[String], column: &[f64], on: &str) -> Result<LongRunEquation> {
    let idx = labels
        .iter()
        .position(|l| l == on)
        .ok_or_else(|| Error::UnknownVariable(on.to_string()))?;
    let norm = column.iter().map(|v| v * v).sum::<f64>().sqrt();
    let pivot = column[idx];
    if !(pivot.abs() > 1e-10 * norm) {
        return Err(Error::ZeroNormalizationCoefficient(on.to_string()));
    }
    let coefficients: Vec<(String, f64)> = labels
        .iter()
        .zip(column)
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, (l, v))| (l.clone(), -v / pivot))
        .collect();
    Ok(LongRunEquation {
        normalized_on: on.to_string(),
        rendering: render_equation(on, &coefficients),
        coefficients,
    })
}

/// Long-run equation from the `index`-th cointegrating vector (0 = largest eigenvalue).
pub fn normalize_long_run(result: &JohansenResult, on: &str, index: usize) -> Result<LongRunEquation> {
    if index >= result.k() {
        return Err(Error::RankOutOfRange {
            rank: index,
            k: result.k(),
        });
    }
    normalize_vector(&result.beta_labels, &result.beta_column(index), on)
}
