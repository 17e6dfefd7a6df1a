//! Levels VAR estimation and lag-order selection by AIC, SC and HQ.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linreg::{gaussian_loglik, ols_fit, residual_covariance, CovarianceDivisor, RegressionFit};
use crate::series::Dataset;

/// Equation-by-equation OLS fit of a VAR(p) with intercept.
#[derive(Debug, Clone)]
pub struct VarFit {
    pub p: usize,
    pub equations: Vec<RegressionFit>,
    /// (T−p)×k, one column per equation.
    pub residuals: DMatrix<f64>,
    /// Regressors `[1, y_{t−1}, …, y_{t−p}]`, grouped by lag then variable.
    pub design: DMatrix<f64>,
}

impl VarFit {
    pub fn t_effective(&self) -> usize {
        self.residuals.nrows()
    }

    /// Total estimated coefficients across all equations.
    pub fn n_params(&self) -> usize {
        self.design.ncols() * self.equations.len()
    }

    pub fn regressors_without_intercept(&self) -> DMatrix<f64> {
        self.design.columns(1, self.design.ncols() - 1).into_owned()
    }

    /// Log-likelihood at the ML residual covariance.
    pub fn loglik(&self) -> Result<f64> {
        let cov = residual_covariance(&self.residuals, CovarianceDivisor::Observations)?;
        gaussian_loglik(&cov, self.t_effective())
    }
}

/// VAR(p) fitted on rows `p + skip .. T`.
fn var_fit_on_sample(d: &Dataset, p: usize, skip: usize) -> Result<VarFit> {
    if p == 0 {
        return Err(Error::InvalidParameter("VAR lag order must be at least 1".into()));
    }
    let (t_len, k) = (d.t(), d.k());
    let start = p + skip;
    let regressors = k * p + 1;
    if t_len <= start || t_len - start <= regressors {
        return Err(Error::SeriesTooShort {
            needed: start + regressors,
            got: t_len,
        });
    }
    let rows = t_len - start;
    let y = d.to_matrix();
    let design = DMatrix::from_fn(rows, regressors, |i, c| {
        if c == 0 {
            1.0
        } else {
            let lag = (c - 1) / k + 1;
            y[(start + i - lag, (c - 1) % k)]
        }
    });
    let equations = (0..k)
        .map(|j| {
            let target: Vec<f64> = (0..rows).map(|i| y[(start + i, j)]).collect();
            ols_fit(&design, &target)
        })
        .collect::<Result<Vec<_>>>()?;
    let residuals = DMatrix::from_fn(rows, k, |i, j| equations[j].residuals[i]);
    Ok(VarFit {
        p,
        equations,
        residuals,
        design,
    })
}

/// Regresses every variable on an intercept and `p` lags of all variables.
pub fn var_fit(d: &Dataset, p: usize) -> Result<VarFit> {
    var_fit_on_sample(d, p, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Criteria {
    pub aic: f64,
    pub sc: f64,
    pub hq: f64,
}

/// Per-observation information criteria for `n_params` total coefficients.
pub fn information_criteria(loglik: f64, t_effective: usize, n_params: usize) -> Criteria {
    let t = t_effective as f64;
    let n = n_params as f64;
    let base = -2.0 * loglik / t;
    Criteria {
        aic: base + 2.0 * n / t,
        sc: base + n * t.ln() / t,
        hq: base + 2.0 * n * t.ln().ln() / t,
    }
}

/// How the recommended lag is chosen from the three criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LagRule {
    /// Lag picked by most criteria; ties go to the smaller lag.
    #[default]
    Majority,
    Aic,
    Sc,
    Hq,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LagRow {
    pub p: usize,
    pub loglik: f64,
    pub n_params: usize,
    pub aic: f64,
    pub sc: f64,
    pub hq: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarredLags {
    pub aic: usize,
    pub sc: usize,
    pub hq: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LagSelectionTable {
    pub rows: Vec<LagRow>,
    pub starred: StarredLags,
    pub recommended: usize,
    pub rule: LagRule,
    pub t_effective: usize,
}

fn argmin_lag(rows: &[LagRow], key: impl Fn(&LagRow) -> f64) -> usize {
    let mut best = &rows[0];
    for r in &rows[1..] {
        if key(r) < key(best) {
            best = r;
        }
    }
    best.p
}

/// Lag chosen by most criteria, smaller lag on ties.
pub fn majority_vote(starred: StarredLags) -> usize {
    let votes = [starred.aic, starred.sc, starred.hq];
    let mut best = (0, usize::MAX);
    for &lag in &votes {
        let count = votes.iter().filter(|&&v| v == lag).count();
        if count > best.0 || (count == best.0 && lag < best.1) {
            best = (count, lag);
        }
    }
    best.1
}

impl LagSelectionTable {
    /// Tabulates criteria from per-lag log-likelihoods on a common sample.
    pub fn from_logliks(logliks: &[(usize, f64)], k: usize, t_effective: usize, rule: LagRule) -> Self {
        let rows: Vec<LagRow> = logliks
            .iter()
            .map(|&(p, ll)| {
                let n_params = k * (k * p + 1);
                let c = information_criteria(ll, t_effective, n_params);
                LagRow {
                    p,
                    loglik: ll,
                    n_params,
                    aic: c.aic,
                    sc: c.sc,
                    hq: c.hq,
                }
            })
            .collect();
        let starred = StarredLags {
            aic: argmin_lag(&rows, |r| r.aic),
            sc: argmin_lag(&rows, |r| r.sc),
            hq: argmin_lag(&rows, |r| r.hq),
        };
        let recommended = match rule {
            LagRule::Aic => starred.aic,
            LagRule::Sc => starred.sc,
            LagRule::Hq => starred.hq,
            LagRule::Majority => majority_vote(starred),
        };
        Self {
            rows,
            starred,
            recommended,
            rule,
            t_effective,
        }
    }
}

/// Fits VAR(1..=p_max) on the common sample of VAR(p_max) and tabulates criteria.
pub fn select_lag(d: &Dataset, p_max: usize, rule: LagRule) -> Result<LagSelectionTable> {
    if p_max == 0 {
        return Err(Error::InvalidParameter("p_max must be at least 1".into()));
    }
    let fits: Vec<(usize, f64, usize)> = (1..=p_max)
        .into_par_iter()
        .map(|p| {
            let fit = var_fit_on_sample(d, p, p_max - p)?;
            Ok((p, fit.loglik()?, fit.t_effective()))
        })
        .collect::<Result<Vec<_>>>()?;
    let t_eff = fits[0].2;
    let logliks: Vec<(usize, f64)> = fits.iter().map(|&(p, ll, _)| (p, ll)).collect();
    Ok(LagSelectionTable::from_logliks(&logliks, d.k(), t_eff, rule))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::{generate, replicate, DgpSpec};
    use proptest::prelude::*;

    #[test]
    fn univariate_var_is_ar_oracle() {
        let d = generate(&DgpSpec::stationary_ar(1, 80, 0.6, 4)).unwrap();
        let fit = var_fit(&d, 3).unwrap();
        let y = d.variables()[0].values();
        let x = DMatrix::from_fn(77, 4, |i, c| if c == 0 { 1.0 } else { y[3 + i - c] });
        let (oracle, _) = crate::oracle::normal_equations(&x, &y[3..]);
        for (a, b) in fit.equations[0].coefficients.iter().zip(oracle) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn white_noise_lag_coefficients_near_zero() {
        let d = generate(&DgpSpec::stationary_ar(2, 2000, 0.0, 8)).unwrap();
        let fit = var_fit(&d, 1).unwrap();
        for eq in &fit.equations {
            for c in &eq.coefficients[1..] {
                assert!(c.abs() < 0.06, "{c}");
            }
        }
    }

    #[test]
    fn too_short_sample() {
        let d = generate(&DgpSpec::random_walk(4, 10, 1)).unwrap();
        assert!(matches!(var_fit(&d, 3), Err(Error::SeriesTooShort { .. })));
    }

    #[test]
    fn trivial_criteria() {
        let c = information_criteria(0.0, 10, 0);
        assert_eq!((c.aic, c.sc, c.hq), (0.0, 0.0, 0.0));
        let c = information_criteria(-12.0, 25, 7);
        assert!((c.sc - c.aic - 7.0 * (25f64.ln() - 2.0) / 25.0).abs() < 1e-12);
        assert!(c.sc > c.aic);
    }

    #[test]
    fn equal_likelihood_prefers_smaller_lag() {
        let table = LagSelectionTable::from_logliks(&[(1, -50.0), (2, -50.0), (3, -50.0)], 2, 30, LagRule::Majority);
        assert_eq!(table.starred, StarredLags { aic: 1, sc: 1, hq: 1 });
        assert_eq!(table.recommended, 1);
    }

    #[test]
    fn majority_rule_tie_break() {
        assert_eq!(majority_vote(StarredLags { aic: 3, sc: 1, hq: 2 }), 1);
        assert_eq!(majority_vote(StarredLags { aic: 2, sc: 1, hq: 2 }), 2);
        assert_eq!(majority_vote(StarredLags { aic: 3, sc: 2, hq: 3 }), 3);
        assert_eq!(majority_vote(StarredLags { aic: 1, sc: 1, hq: 1 }), 1);
    }

    #[test]
    fn strong_var1_recommends_lag_one() {
        let spec = DgpSpec::stationary_ar(2, 500, 0.7, 12);
        let picks = replicate(&spec, 200, |d| Ok(select_lag(d, 4, LagRule::Majority)?.recommended));
        let ones = picks.iter().filter(|p| matches!(p, Ok(1))).count();
        assert!(ones as f64 / 200.0 >= 0.95, "{ones}");
    }

    #[test]
    fn criteria_recomputable_from_residual_covariance() {
        let d = generate(&DgpSpec::random_walk(3, 60, 21)).unwrap();
        let table = select_lag(&d, 3, LagRule::Majority).unwrap();
        for row in &table.rows {
            let fit = var_fit_on_sample(&d, row.p, 3 - row.p).unwrap();
            let cov = residual_covariance(&fit.residuals, CovarianceDivisor::Observations).unwrap();
            let ll = gaussian_loglik(&cov, fit.t_effective()).unwrap();
            let c = information_criteria(ll, table.t_effective, fit.n_params());
            assert!((c.aic - row.aic).abs() < 1e-10);
            assert!((c.sc - row.sc).abs() < 1e-10);
            assert!((c.hq - row.hq).abs() < 1e-10);
        }
        assert_eq!(table.t_effective, 57);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn sc_never_picks_more_lags_than_aic(seed in 0u64..10_000, k in 1usize..4, t in 20usize..80) {
            let d = generate(&DgpSpec::random_walk(k, t, seed)).unwrap();
            let p_max = 3;
            prop_assume!(t - p_max > k * p_max + 1 + 8);
            let table = select_lag(&d, p_max, LagRule::Majority).unwrap();
            prop_assert!(table.t_effective >= 8);
            prop_assert!(table.starred.sc <= table.starred.aic);
            for r in &table.rows {
                prop_assert!(r.hq <= r.sc + 1e-12 && r.aic <= r.hq + 1e-12 || table.t_effective < 16);
            }
        }

        #[test]
        fn criteria_invariant_to_reordering(seed in 0u64..10_000) {
            let d = generate(&DgpSpec::random_walk(3, 40, seed)).unwrap();
            let swapped = d.select(&["y3", "y1", "y2"]).unwrap();
            let a = select_lag(&d, 2, LagRule::Majority).unwrap();
            let b = select_lag(&swapped, 2, LagRule::Majority).unwrap();
            for (ra, rb) in a.rows.iter().zip(&b.rows) {
                prop_assert!((ra.aic - rb.aic).abs() < 1e-9);
                prop_assert!((ra.sc - rb.sc).abs() < 1e-9);
                prop_assert!((ra.hq - rb.hq).abs() < 1e-9);
            }
        }
    }
}
