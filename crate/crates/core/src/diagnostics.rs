//! Residual diagnostics for multivariate models: a system White test and a
//! Cholesky-orthogonalized Jarque-Bera normality test.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::linalg::{cholesky_checked, hstack, symmetrize};
use crate::linreg::residualize;

/// Upper-tail chi-square probability.
pub fn chi_square_sf(statistic: f64, df: usize) -> f64 {
    if statistic.is_nan() {
        return f64::NAN;
    }
    if statistic <= 0.0 {
        return 1.0;
    }
    ChiSquared::new(df as f64).expect("positive df").sf(statistic)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Homoscedastic,
    Heteroscedastic,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeteroskedasticityResult {
    pub chi_sq: f64,
    pub df: usize,
    pub p_value: f64,
    pub verdict: Verdict,
    pub n_obs: usize,
}

/// Joint White test without cross terms.
///
/// Every element of vech(u_t u_tᵀ) is regressed on a constant, the regressors
/// and their squares. With Σ̂ the residual covariance of that auxiliary system
/// and Σ̂₀ the covariance of the products about their means, the statistic is
/// `T (m − tr(Σ̂ Σ̂₀⁻¹))` on `m · 2q` degrees of freedom, m = k(k+1)/2 and q
/// the number of non-constant regressors.
pub fn white_system_test(
    residuals: &DMatrix<f64>,
    regressors: &DMatrix<f64>,
    alpha: f64,
) -> Result<HeteroskedasticityResult> {
    let (t, k) = residuals.shape();
    if regressors.nrows() != t {
        return Err(Error::ShapeMismatch(format!(
            "{t} residual rows but {} regressor rows",
            regressors.nrows()
        )));
    }
    let q = regressors.ncols();
    let n_aux = 1 + 2 * q;
    if k == 0 || q == 0 || t <= n_aux {
        return Err(Error::ShapeMismatch(format!(
            "{t} rows cannot support {n_aux} auxiliary regressors for {k} equations"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let m = pairs.len();
    let psi = DMatrix::from_fn(t, m, |s, c| {
        let (i, j) = pairs[c];
        residuals[(s, i)] * residuals[(s, j)]
    });
    let ones = DMatrix::from_element(t, 1, 1.0);
    let squares = regressors.map(|v| v * v);
    let x = hstack(&[&ones, regressors, &squares]);

    let centred = residualize(&ones, &psi)?;
    let tf = t as f64;
    let sigma0 = symmetrize(&(centred.transpose() * &centred / tf));
    let chol0 = cholesky_checked(&sigma0).ok_or(Error::RankDeficient)?;
    let aux = residualize(&x, &psi)?;
    let sigma = symmetrize(&(aux.transpose() * &aux / tf));
    let ratio = chol0.solve(&sigma);
    let chi_sq = (tf * (m as f64 - ratio.trace())).max(0.0);
    let df = m * 2 * q;
    let p_value = chi_square_sf(chi_sq, df);
    Ok(HeteroskedasticityResult {
        chi_sq,
        df,
        p_value,
        verdict: if p_value <= alpha {
            Verdict::Heteroscedastic
        } else {
            Verdict::Homoscedastic
        },
        n_obs: t,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orthogonalization {
    /// Inverse of the lower Cholesky factor of the residual covariance.
    #[default]
    Cholesky,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquareStat {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

impl ChiSquareStat {
    pub fn new(statistic: f64, df: usize) -> Self {
        ChiSquareStat {
            statistic,
            df,
            p_value: chi_square_sf(statistic, df),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentNormality {
    pub component: usize,
    pub skewness: f64,
    pub skewness_test: ChiSquareStat,
    pub kurtosis: f64,
    pub kurtosis_test: ChiSquareStat,
    pub jarque_bera: ChiSquareStat,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalityResult {
    pub components: Vec<ComponentNormality>,
    pub joint_skewness: ChiSquareStat,
    pub joint_kurtosis: ChiSquareStat,
    pub joint_jarque_bera: ChiSquareStat,
    pub n_obs: usize,
}

/// Centred residuals premultiplied by the inverse Cholesky factor of their
/// 1/T covariance, so the result has identity sample covariance.
pub fn orthogonalize(residuals: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let t = residuals.nrows();
    let mean = residuals.row_mean();
    let centred = DMatrix::from_fn(t, residuals.ncols(), |i, j| residuals[(i, j)] - mean[j]);
    let cov = symmetrize(&(centred.transpose() * &centred / t as f64));
    let l = cholesky_checked(&cov).ok_or(Error::SingularCovariance)?.l();
    let w = l
        .solve_lower_triangular(&centred.transpose())
        .ok_or(Error::SingularCovariance)?;
    Ok(w.transpose())
}

pub fn multivariate_jb(residuals: &DMatrix<f64>) -> Result<NormalityResult> {
    multivariate_jb_with(residuals, Orthogonalization::Cholesky)
}

pub fn multivariate_jb_with(residuals: &DMatrix<f64>, method: Orthogonalization) -> Result<NormalityResult> {
    let (t, k) = residuals.shape();
    if k == 0 {
        return Err(Error::ShapeMismatch("no residual columns".into()));
    }
    if t < 8 {
        return Err(Error::SeriesTooShort { needed: 8, got: t });
    }
    let w = match method {
        Orthogonalization::Cholesky => orthogonalize(residuals)?,
    };
    let tf = t as f64;
    let components: Vec<ComponentNormality> = (0..k)
        .map(|j| {
            let col = w.column(j);
            let skewness = col.iter().map(|v| v.powi(3)).sum::<f64>() / tf;
            let kurtosis = col.iter().map(|v| v.powi(4)).sum::<f64>() / tf;
            let s = tf * skewness * skewness / 6.0;
            let c = tf * (kurtosis - 3.0).powi(2) / 24.0;
            ComponentNormality {
                component: j + 1,
                skewness,
                skewness_test: ChiSquareStat::new(s, 1),
                kurtosis,
                kurtosis_test: ChiSquareStat::new(c, 1),
                jarque_bera: ChiSquareStat::new(s + c, 2),
            }
        })
        .collect();
    let sum = |f: fn(&ComponentNormality) -> f64| components.iter().map(f).sum::<f64>();
    let joint_skewness = ChiSquareStat::new(sum(|c| c.skewness_test.statistic), k);
    let joint_kurtosis = ChiSquareStat::new(sum(|c| c.kurtosis_test.statistic), k);
    let joint_jarque_bera = ChiSquareStat::new(sum(|c| c.jarque_bera.statistic), 2 * k);
    Ok(NormalityResult {
        components,
        joint_skewness,
        joint_kurtosis,
        joint_jarque_bera,
        n_obs: t,
    })
}
