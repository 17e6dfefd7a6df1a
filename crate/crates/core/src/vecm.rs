//! Vector error-correction model estimated by equation-wise OLS given a
//! cointegration rank.

use std::fmt::Write as _;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};
use crate::johansen::{reduced_rank_regression, restricted_value, unrestricted_block, DetCase};
use crate::linalg::hstack;
use crate::linreg::{ols_fit, RegressionFit};
use crate::series::{lag_design, Dataset};

/// How the lagged error-correction terms enter the short-run equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EcLayout {
    /// `EC^(1)_{t−1}, …, EC^(r)_{t−1}` from r distinct relations.
    #[default]
    DistinctRelations,
    /// `EC_{t−1}, …, EC_{t−r}` from the first relation only.
    ///
    /// For r ≥ 2 the differences of successive EC lags are combinations of
    /// the lagged Δy terms, so the design is singular whenever those enter.
    TimeLags,
}

/// Error-correction series, one per relation, each of full sample length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EcSeries {
    pub names: Vec<String>,
    pub years: Vec<i32>,
    pub values: Vec<Vec<f64>>,
}

/// `ec_t = βᵀ y_t`, plus the restricted deterministic term when `beta` carries one.
///
/// `beta` is k×r, or (k+1)×r under a restricted constant or trend.
pub fn ec_series(d: &Dataset, beta: &DMatrix<f64>, case: DetCase) -> Result<EcSeries> {
    let k = d.k();
    let k1 = k + usize::from(case.restricted_term().is_some());
    if beta.ncols() == 0 || beta.nrows() != k1 {
        return Err(Error::ShapeMismatch(format!(
            "beta is {}x{}, expected {k1} rows and at least one column",
            beta.nrows(),
            beta.ncols()
        )));
    }
    let y = d.to_matrix();
    let values = (0..beta.ncols())
        .map(|j| {
            (0..d.t())
                .map(|t| {
                    let mut v: f64 = (0..k).map(|i| beta[(i, j)] * y[(t, i)]).sum();
                    // the restricted term pairs y_{t} with the row at t + 1
                    if let Some(dv) = restricted_value(case, t + 1) {
                        v += beta[(k, j)] * dv;
                    }
                    v
                })
                .collect()
        })
        .collect();
    Ok(EcSeries {
        names: (1..=beta.ncols()).map(|j| format!("EC{j}")).collect(),
        years: d.years().to_vec(),
        values,
    })
}

/// β columns rescaled so their leading r×r block is the identity.
pub fn normalize_beta(beta: &DMatrix<f64>, r: usize) -> Result<DMatrix<f64>> {
    let b = beta.columns(0, r).into_owned();
    let top = b.rows(0, r).into_owned();
    let inv = top
        .try_inverse()
        .filter(|m| m.iter().all(|v| v.is_finite()))
        .ok_or_else(|| Error::ZeroNormalizationCoefficient("leading block of beta".into()))?;
    Ok(b * inv)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VecmEquation {
    /// Name of the differenced dependent variable.
    pub dependent: String,
    pub regressors: Vec<String>,
    pub fit: RegressionFit,
    /// |t| above the two-sided critical value.
    pub significant: Vec<bool>,
    /// Column index in `regressors` of the first EC term.
    pub ec_offset: usize,
}

impl VecmEquation {
    pub fn coefficient(&self, name: &str) -> Option<f64> {
        let i = self.regressors.iter().position(|r| r == name)?;
        Some(self.fit.coefficients[i])
    }

    pub fn t_statistic(&self, name: &str) -> Option<f64> {
        let i = self.regressors.iter().position(|r| r == name)?;
        Some(self.fit.t_statistics[i])
    }

    /// Loadings on the EC terms.
    pub fn loadings(&self) -> &[f64] {
        &self.fit.coefficients[self.ec_offset..]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VecmModel {
    pub rank: usize,
    pub lags: usize,
    pub det_case: DetCase,
    pub layout: EcLayout,
    pub significance: f64,
    pub variables: Vec<String>,
    /// Normalized cointegrating vectors, one inner vec per β row.
    pub beta: Vec<Vec<f64>>,
    pub beta_labels: Vec<String>,
    pub equations: Vec<VecmEquation>,
    /// (T−p)×k.
    #[serde(skip)]
    pub residuals: DMatrix<f64>,
    /// Regressors other than the constant, (T−p) rows.
    #[serde(skip)]
    pub regressors: DMatrix<f64>,
    pub t_effective: usize,
}

impl VecmModel {
    pub fn equation(&self, variable: &str) -> Option<&VecmEquation> {
        self.variables.iter().position(|v| v == variable).map(|i| &self.equations[i])
    }

    /// Coefficient table, six decimals, `***` on terms significant at the model level.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self
            .equations
            .first()
            .map_or(0, |e| e.regressors.iter().map(|r| r.len()).max().unwrap_or(0))
            .max(18);
        let _ = write!(out, "{:<width$}", "");
        for e in &self.equations {
            let _ = write!(out, "{:>18}", e.dependent);
        }
        out.push('\n');
        let Some(first) = self.equations.first() else {
            return out;
        };
        for (i, name) in first.regressors.iter().enumerate() {
            let _ = write!(out, "{name:<width$}");
            for e in &self.equations {
                let star = if e.significant[i] { "***" } else { "" };
                let _ = write!(out, "{:>18}", format!("{:.6}{star}", e.fit.coefficients[i]));
            }
            out.push('\n');
            let _ = write!(out, "{:<width$}", "");
            for e in &self.equations {
                let _ = write!(out, "{:>18}", format!("({:.6})", e.fit.standard_errors[i]));
            }
            out.push('\n');
            let _ = write!(out, "{:<width$}", "");
            for e in &self.equations {
                let _ = write!(out, "{:>18}", format!("[{:.6}]", e.fit.t_statistics[i]));
            }
            out.push('\n');
        }
        for (label, get) in [
            ("R-squared", (|f: &RegressionFit| f.r_squared) as fn(&RegressionFit) -> f64),
            ("Adj. R-squared", |f| f.adjusted_r_squared),
            ("F-statistic", |f| f.f_statistic),
        ] {
            let _ = write!(out, "{label:<width$}");
            for e in &self.equations {
                let _ = write!(out, "{:>18.6}", get(&e.fit));
            }
            out.push('\n');
        }
        let _ = write!(
            out,
            "Standard errors in ( ), t-statistics in [ ]; *** significant at the {}% level",
            crate::percent_label(self.significance)
        );
        out
    }
}

/// Two-sided Student-t critical value.
pub fn t_critical(alpha: f64, dof: usize) -> f64 {
    if dof == 0 {
        return f64::INFINITY;
    }
    StudentsT::new(0.0, 1.0, dof as f64)
        .expect("positive dof")
        .inverse_cdf(1.0 - alpha / 2.0)
}

/// VECM with β from the Johansen problem at the same lag order and deterministic case.
pub fn vecm_fit(d: &Dataset, p: usize, r: usize, case: DetCase, alpha: f64) -> Result<VecmModel> {
    vecm_fit_with(d, p, r, case, alpha, EcLayout::DistinctRelations)
}

pub fn vecm_fit_with(
    d: &Dataset,
    p: usize,
    r: usize,
    case: DetCase,
    alpha: f64,
    layout: EcLayout,
) -> Result<VecmModel> {
    let k = d.k();
    if r >= k.max(1) && r > 0 {
        return Err(Error::RankOutOfRange { rank: r, k });
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("significance level {alpha} outside (0, 1)")));
    }
    let n_relations = match layout {
        EcLayout::DistinctRelations => r,
        EcLayout::TimeLags => r.min(1),
    };
    if layout == EcLayout::TimeLags && r > p {
        return Err(Error::InvalidParameter(format!(
            "{r} time lags of the EC term need at least {r} VAR lags, got {p}"
        )));
    }
    let ld = lag_design(d, p)?;
    let names = d.names();
    let mut beta_labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    if let Some(term) = case.restricted_term() {
        beta_labels.push(term.to_string());
    }

    let (beta, ec_block, ec_names) = if n_relations == 0 {
        (DMatrix::zeros(beta_labels.len(), 0), DMatrix::zeros(ld.rows(), 0), Vec::new())
    } else {
        let rr = reduced_rank_regression(d, p, case)?;
        let beta = normalize_beta(&rr.beta, n_relations)?;
        let ec = ec_series(d, &beta, case)?;
        let (block, labels) = match layout {
            EcLayout::DistinctRelations => (
                DMatrix::from_fn(ld.rows(), r, |i, j| ec.values[j][ld.time_index[i] - 1]),
                (1..=r).map(|j| format!("EC{j}(-1)")).collect::<Vec<_>>(),
            ),
            EcLayout::TimeLags => (
                DMatrix::from_fn(ld.rows(), r, |i, j| ec.values[0][ld.time_index[i] - 1 - j]),
                (1..=r).map(|j| format!("EC(-{j})")).collect(),
            ),
        };
        (beta, block, labels)
    };

    let det = unrestricted_block(case, &ld);
    let mut regressor_names: Vec<String> = match case.n_unrestricted() {
        0 => vec![],
        1 => vec!["const".into()],
        _ => vec!["const".into(), "trend".into()],
    };
    for lag in 1..p {
        for n in &names {
            regressor_names.push(format!("d_{n}({lag})"));
        }
    }
    let ec_offset = regressor_names.len();
    regressor_names.extend(ec_names);

    let x = hstack(&[&det, &ld.lagged_diffs, &ec_block]);
    if x.ncols() == 0 {
        return Err(Error::InvalidParameter(
            "model has no regressors: use a deterministic term, p ≥ 2 or r ≥ 1".into(),
        ));
    }
    let fits = (0..k)
        .into_par_iter()
        .map(|j| {
            let y: Vec<f64> = ld.dy.column(j).iter().copied().collect();
            ols_fit(&x, &y)
        })
        .collect::<Result<Vec<_>>>()?;
    let equations: Vec<VecmEquation> = fits
        .into_iter()
        .zip(&names)
        .map(|(fit, n)| {
            let crit = t_critical(alpha, fit.dof());
            VecmEquation {
                dependent: format!("d_{n}"),
                regressors: regressor_names.clone(),
                significant: fit.t_statistics.iter().map(|t| t.abs() > crit).collect(),
                fit,
                ec_offset,
            }
        })
        .collect();
    let residuals = DMatrix::from_fn(ld.rows(), k, |i, j| equations[j].fit.residuals[i]);
    let skip = usize::from(case.has_intercept());
    let regressors = x.columns(skip, x.ncols() - skip).into_owned();
    Ok(VecmModel {
        rank: r,
        lags: p,
        det_case: case,
        layout,
        significance: alpha,
        variables: names.iter().map(|s| s.to_string()).collect(),
        beta: (0..beta.nrows()).map(|i| beta.row(i).iter().copied().collect()).collect(),
        beta_labels,
        equations,
        residuals,
        regressors,
        t_effective: ld.rows(),
    })
}

/// Share of last period's disequilibrium removed per period.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Correction {
    pub term: String,
    pub loading: f64,
    /// |loading| × 100.
    pub percentage: f64,
    pub significant: bool,
}

pub fn disequilibrium_correction(eq: &VecmEquation) -> Vec<Correction> {
    (eq.ec_offset..eq.regressors.len())
        .map(|i| {
            let loading = eq.fit.coefficients[i];
            Correction {
                term: eq.regressors[i].clone(),
                loading,
                percentage: loading.abs() * 100.0,
                significant: eq.significant[i],
            }
        })
        .collect()
}
