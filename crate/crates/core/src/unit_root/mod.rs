//! Augmented Dickey-Fuller test and I(0)/I(1) classification.

mod mackinnon;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub use mackinnon::{asymptotic_pvalue, critical_values, mackinnon_pvalue, CRITICAL_LEVELS};

use crate::error::{Error, Result};
use crate::linalg::hstack;
use crate::linreg::{ols_fit, RegressionFit};
use crate::series::{difference, lag_design, Dataset, Series};

/// Deterministic terms in the test regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Deterministic {
    None,
    Constant,
    ConstantAndTrend,
}

impl Deterministic {
    pub fn n_terms(self) -> usize {
        match self {
            Deterministic::None => 0,
            Deterministic::Constant => 1,
            Deterministic::ConstantAndTrend => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Deterministic::None => "none",
            Deterministic::Constant => "constant",
            Deterministic::ConstantAndTrend => "constant and trend",
        }
    }
}

/// Augmentation lag choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdfLags {
    Fixed(usize),
    /// Schwarz criterion over `0..=max_lags`; `None` uses `⌊12 (T/100)^¼⌋`
    /// capped to what the sample supports.
    Auto { max_lags: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdfResult {
    pub statistic: f64,
    pub p_value: f64,
    pub lags_used: usize,
    pub deterministic: Deterministic,
    pub n_effective: usize,
    /// Finite-sample critical values at 1%, 5% and 10%.
    pub critical_values: [f64; 3],
}

struct AdfFit {
    fit: RegressionFit,
    n: usize,
}

/// Regression of Δy_t on y_{t−1}, deterministics and `lags` lagged differences,
/// using only rows whose time index is at least `first_row_time`.
fn adf_regression(s: &Series, det: Deterministic, lags: usize, skip: usize) -> Result<AdfFit> {
    let regressors = 1 + det.n_terms() + lags;
    let needed = 1 + lags + skip + regressors;
    if s.len() <= needed {
        return Err(Error::SeriesTooShort {
            needed,
            got: s.len(),
        });
    }
    let d = Dataset::new(vec![s.clone()])?;
    let ld = lag_design(&d, lags + 1)?;
    let rows = ld.rows() - skip;
    let tail = |m: &DMatrix<f64>| m.rows(skip, rows).into_owned();
    let mut blocks = vec![tail(&ld.lagged_levels)];
    match det {
        Deterministic::None => {}
        Deterministic::Constant => blocks.push(tail(&ld.intercept)),
        Deterministic::ConstantAndTrend => {
            blocks.push(tail(&ld.intercept));
            blocks.push(DMatrix::from_fn(rows, 1, |i, _| ld.time_index[skip + i] as f64));
        }
    }
    blocks.push(tail(&ld.lagged_diffs));
    let refs: Vec<&DMatrix<f64>> = blocks.iter().collect();
    let x = hstack(&refs);
    let y: Vec<f64> = tail(&ld.dy).iter().copied().collect();
    let fit = ols_fit(&x, &y)?;
    Ok(AdfFit { fit, n: rows })
}

fn check_variance(s: &Series) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::SeriesTooShort { needed: 2, got: s.len() });
    }
    let d = difference(s, 1)?;
    let v = d.values();
    let scale = v.iter().map(|x| x.abs()).fold(0.0_f64, f64::max).max(s.values()[0].abs());
    if v.iter().all(|&x| (x - v[0]).abs() <= 1e-14 * scale.max(f64::MIN_POSITIVE)) {
        return Err(Error::ZeroVariance);
    }
    Ok(())
}

/// Default upper bound for automatic lag search.
pub fn default_max_lags(len: usize, det: Deterministic) -> usize {
    let schwert = (12.0 * (len as f64 / 100.0).powf(0.25)).floor() as usize;
    let cap = (len / 2).saturating_sub(det.n_terms() + 2);
    schwert.min(cap)
}

/// Lag in `0..=max_lags` minimizing the Schwarz criterion of the ADF
/// regression, all candidates fitted on the sample of the longest one.
pub fn auto_lag(s: &Series, det: Deterministic, max_lags: usize) -> Result<usize> {
    check_variance(s)?;
    let mut best = (f64::INFINITY, 0);
    for lags in 0..=max_lags {
        let r = adf_regression(s, det, lags, max_lags - lags)?;
        let n = r.n as f64;
        let sc = (r.fit.ssr / n).ln() + r.fit.n_regressors as f64 * n.ln() / n;
        if sc < best.0 {
            best = (sc, lags);
        }
    }
    Ok(best.1)
}

/// Augmented Dickey-Fuller test of a unit root in `s`.
pub fn adf_test(s: &Series, det: Deterministic, lags: AdfLags) -> Result<AdfResult> {
    check_variance(s)?;
    let lags = match lags {
        AdfLags::Fixed(l) => l,
        AdfLags::Auto { max_lags } => {
            let max = max_lags.unwrap_or_else(|| default_max_lags(s.len(), det));
            auto_lag(s, det, max)?
        }
    };
    let r = adf_regression(s, det, lags, 0)?;
    let statistic = r.fit.t_statistics[0];
    if !statistic.is_finite() {
        return Err(Error::ZeroVariance);
    }
    Ok(AdfResult {
        statistic,
        p_value: mackinnon_pvalue(statistic, det, r.n),
        lags_used: lags,
        deterministic: det,
        n_effective: r.n,
        critical_values: critical_values(det, r.n),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntegrationOrder {
    I0,
    I1,
    Inconclusive,
}

impl IntegrationOrder {
    pub fn label(self) -> &'static str {
        match self {
            IntegrationOrder::I0 => "I(0)",
            IntegrationOrder::I1 => "I(1)",
            IntegrationOrder::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegrationDecision {
    pub variable: String,
    pub level: AdfResult,
    pub first_difference: AdfResult,
    pub order: IntegrationOrder,
}

/// Settings for [`classify_integration`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyConfig {
    pub level_det: Deterministic,
    pub diff_det: Deterministic,
    pub max_lags: Option<usize>,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            level_det: Deterministic::ConstantAndTrend,
            diff_det: Deterministic::Constant,
            max_lags: None,
        }
    }
}

/// ADF at level and first difference; I(1) when only the difference rejects.
pub fn classify_integration(s: &Series, alpha: f64, cfg: ClassifyConfig) -> Result<IntegrationDecision> {
    let lags = AdfLags::Auto { max_lags: cfg.max_lags };
    let level = adf_test(s, cfg.level_det, lags)?;
    let first_difference = adf_test(&difference(s, 1)?, cfg.diff_det, lags)?;
    let order = if level.p_value <= alpha {
        IntegrationOrder::I0
    } else if first_difference.p_value <= alpha {
        IntegrationOrder::I1
    } else {
        IntegrationOrder::Inconclusive
    };
    Ok(IntegrationDecision {
        variable: s.name().to_string(),
        level,
        first_difference,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::{generate, replicate, DgpSpec, Rng};
    use proptest::prelude::*;

    /// Dickey-Fuller t-ratio with a constant from the textbook formula,
    /// independent of the regression machinery above.
    fn df_oracle_constant(y: &[f64]) -> f64 {
        let n = y.len() - 1;
        let x: Vec<f64> = y[..n].to_vec();
        let dy: Vec<f64> = (0..n).map(|i| y[i + 1] - y[i]).collect();
        let mx = x.iter().sum::<f64>() / n as f64;
        let my = dy.iter().sum::<f64>() / n as f64;
        let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
        let sxy: f64 = x.iter().zip(&dy).map(|(a, b)| (a - mx) * (b - my)).sum();
        let g = sxy / sxx;
        let c = my - g * mx;
        let ssr: f64 = x.iter().zip(&dy).map(|(a, b)| (b - c - g * a).powi(2)).sum();
        let s2 = ssr / (n as f64 - 2.0);
        g / (s2 / sxx).sqrt()
    }

    fn series(vals: Vec<f64>) -> Series {
        Series::from_start("y", 1, vals).unwrap()
    }

    #[test]
    fn constant_series_is_zero_variance() {
        let err = adf_test(&series(vec![3.0; 30]), Deterministic::Constant, AdfLags::Fixed(0)).unwrap_err();
        assert_eq!(err, Error::ZeroVariance);
    }

    #[test]
    fn too_short() {
        let s = series(vec![1.0, 2.5, 2.0, 4.0]);
        assert!(matches!(
            adf_test(&s, Deterministic::ConstantAndTrend, AdfLags::Fixed(2)),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn zero_max_lags_selects_zero() {
        let mut rng = Rng::new(1);
        let s = series((0..50).map(|_| rng.normal()).collect());
        assert_eq!(auto_lag(&s, Deterministic::Constant, 0).unwrap(), 0);
    }

    #[test]
    fn lag_zero_matches_direct_oracle() {
        for seed in 0..20 {
            let d = generate(&DgpSpec::random_walk(1, 60, seed)).unwrap();
            let s = &d.variables()[0];
            let r = adf_test(s, Deterministic::Constant, AdfLags::Fixed(0)).unwrap();
            let oracle = df_oracle_constant(s.values());
            assert!((r.statistic - oracle).abs() < 1e-9, "{} vs {oracle}", r.statistic);
            assert_eq!(r.n_effective, 59);
        }
    }

    #[test]
    fn white_noise_selects_no_lags() {
        let spec = DgpSpec::stationary_ar(1, 200, 0.0, 77);
        let picks = replicate(&spec, 500, |d| auto_lag(&d.variables()[0], Deterministic::Constant, default_max_lags(200, Deterministic::Constant)));
        let zeros = picks.iter().filter(|p| matches!(p, Ok(0))).count();
        assert!(zeros as f64 / 500.0 >= 0.90, "{zeros}");
    }

    #[test]
    fn ar2_differences_select_two_or_more() {
        // Δy_t = 0.2 Δy_{t−1} + 0.6 Δy_{t−2} + e_t, integrated once
        let picks: Vec<usize> = (0..200u64)
            .map(|seed| {
                let mut rng = Rng::new(seed + 1000);
                let mut dy = vec![0.0; 250];
                for t in 2..250 {
                    dy[t] = 0.2 * dy[t - 1] + 0.6 * dy[t - 2] + rng.normal();
                }
                let mut y = vec![0.0; 200];
                let mut acc = 0.0;
                for t in 0..200 {
                    acc += dy[50 + t];
                    y[t] = acc;
                }
                auto_lag(&series(y), Deterministic::Constant, 8).unwrap()
            })
            .collect();
        let hits = picks.iter().filter(|&&l| l >= 2).count();
        assert!(hits > 100, "{hits}");
    }

    #[test]
    fn stationary_ar_is_classified_i0() {
        let spec = DgpSpec::stationary_ar(1, 300, 0.5, 5);
        let out = replicate(&spec, 200, |d| classify_integration(&d.variables()[0], 0.05, ClassifyConfig::default()));
        let i0 = out.iter().filter(|o| matches!(o, Ok(dec) if dec.order == IntegrationOrder::I0)).count();
        assert!(i0 as f64 / 200.0 >= 0.90, "{i0}");
    }

    #[test]
    fn random_walk_is_classified_i1() {
        let spec = DgpSpec::random_walk(1, 300, 6);
        let out = replicate(&spec, 200, |d| classify_integration(&d.variables()[0], 0.05, ClassifyConfig::default()));
        let i1 = out.iter().filter(|o| matches!(o, Ok(dec) if dec.order == IntegrationOrder::I1)).count();
        assert!(i1 as f64 / 200.0 >= 0.85, "{i1}");
    }

    #[test]
    fn decision_follows_p_values() {
        let d = generate(&DgpSpec::random_walk(1, 80, 3)).unwrap();
        let dec = classify_integration(&d.variables()[0], 0.05, ClassifyConfig::default()).unwrap();
        let expect_i1 = dec.level.p_value > 0.05 && dec.first_difference.p_value <= 0.05;
        assert_eq!(dec.order == IntegrationOrder::I1, expect_i1);
        assert!(dec.level.lags_used <= default_max_lags(80, Deterministic::ConstantAndTrend));
    }

    proptest! {
        #[test]
        fn constant_shift_leaves_statistic_unchanged(seed in 0u64..2000, shift in -1e3f64..1e3, lags in 0usize..3) {
            let d = generate(&DgpSpec::random_walk(1, 50, seed)).unwrap();
            let s = &d.variables()[0];
            let shifted = series(s.values().iter().map(|v| v + shift).collect());
            let a = adf_test(s, Deterministic::Constant, AdfLags::Fixed(lags)).unwrap();
            let b = adf_test(&shifted, Deterministic::Constant, AdfLags::Fixed(lags)).unwrap();
            prop_assert!((a.statistic - b.statistic).abs() < 1e-9);
        }
    }
}
