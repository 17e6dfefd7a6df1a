//! Ordinary least squares, residual covariance and the Gaussian log-likelihood.
//!
//! Every test in the crate reduces to OLS subproblems solved here. Fits use a
//! Householder QR of the design; the normal equations are never formed.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{cholesky_checked, RANK_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegressionFit {
    pub coefficients: Vec<f64>,
    pub standard_errors: Vec<f64>,
    pub t_statistics: Vec<f64>,
    pub residuals: Vec<f64>,
    pub r_squared: f64,
    pub adjusted_r_squared: f64,
    pub f_statistic: f64,
    pub n_obs: usize,
    pub n_regressors: usize,
    /// Whether the design contains a constant column; selects centred vs
    /// uncentred R².
    pub has_intercept: bool,
    pub ssr: f64,
}

impl RegressionFit {
    /// Residual variance with the `n − k` divisor.
    pub fn sigma2(&self) -> f64 {
        self.ssr / (self.n_obs - self.n_regressors) as f64
    }

    pub fn dof(&self) -> usize {
        self.n_obs - self.n_regressors
    }
}

fn constant_column(x: &DMatrix<f64>, j: usize) -> bool {
    let first = x[(0, j)];
    first != 0.0 && x.column(j).iter().all(|&v| v == first)
}

/// Least squares fit of `y` on the columns of `x`.
pub fn ols_fit(x: &DMatrix<f64>, y: &[f64]) -> Result<RegressionFit> {
    let (n, k) = x.shape();
    if n != y.len() {
        return Err(Error::ShapeMismatch(format!("{n} design rows vs {} responses", y.len())));
    }
    if k == 0 || n <= k {
        return Err(Error::ShapeMismatch(format!(
            "need more rows than regressors, got {n} rows and {k} regressors"
        )));
    }
    let yv = DVector::from_column_slice(y);
    let qr = x.clone().qr();
    let r = qr.r();
    let max_diag = (0..k).map(|i| r[(i, i)].abs()).fold(0.0_f64, f64::max);
    if !(max_diag > 0.0) || (0..k).any(|i| r[(i, i)].abs() <= RANK_TOL * max_diag) {
        return Err(Error::RankDeficient);
    }
    let qty = qr.q().transpose() * &yv;
    let beta = r
        .solve_upper_triangular(&qty)
        .ok_or(Error::RankDeficient)?;
    let resid = &yv - x * &beta;
    let ssr = resid.norm_squared();

    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(k, k))
        .ok_or(Error::RankDeficient)?;
    let xtx_inv_diag: Vec<f64> = (0..k).map(|i| r_inv.row(i).norm_squared()).collect();
    let dof = (n - k) as f64;
    let sigma2 = ssr / dof;
    let standard_errors: Vec<f64> = xtx_inv_diag.iter().map(|d| (sigma2 * d).sqrt()).collect();
    let t_statistics = beta
        .iter()
        .zip(&standard_errors)
        .map(|(b, se)| b / se)
        .collect();

    let has_intercept = (0..k).any(|j| constant_column(x, j));
    let tss = if has_intercept {
        let mean = yv.mean();
        yv.iter().map(|v| (v - mean).powi(2)).sum::<f64>()
    } else {
        yv.norm_squared()
    };
    let r_squared = if tss > 0.0 { (1.0 - ssr / tss).clamp(0.0, 1.0) } else { 0.0 };
    let (adjusted_r_squared, f_statistic) = if has_intercept {
        let adj = 1.0 - (1.0 - r_squared) * (n as f64 - 1.0) / dof;
        let f = if k > 1 {
            (r_squared / (k - 1) as f64) / ((1.0 - r_squared) / dof)
        } else {
            0.0
        };
        (adj, f)
    } else {
        let adj = 1.0 - (1.0 - r_squared) * n as f64 / dof;
        (adj, (r_squared / k as f64) / ((1.0 - r_squared) / dof))
    };

    Ok(RegressionFit {
        coefficients: beta.iter().copied().collect(),
        standard_errors,
        t_statistics,
        residuals: resid.iter().copied().collect(),
        r_squared,
        adjusted_r_squared,
        f_statistic,
        n_obs: n,
        n_regressors: k,
        has_intercept,
        ssr,
    })
}

/// Residuals of every column of `y` after projecting on `x`.
///
/// With an empty `x` the input is returned unchanged.
pub fn residualize(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if x.ncols() == 0 {
        return Ok(y.clone());
    }
    let mut out = DMatrix::zeros(y.nrows(), y.ncols());
    for j in 0..y.ncols() {
        let col: Vec<f64> = y.column(j).iter().copied().collect();
        let fit = ols_fit(x, &col)?;
        out.set_column(j, &DVector::from_vec(fit.residuals));
    }
    Ok(out)
}

/// Divisor used by [`residual_covariance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CovarianceDivisor {
    /// 1/T, the maximum-likelihood convention.
    Observations,
    /// 1/(T − m) with `m` regressors per equation.
    DegreesOfFreedom(usize),
}

/// Cross-equation residual covariance from a T×k residual block.
pub fn residual_covariance(residuals: &DMatrix<f64>, divisor: CovarianceDivisor) -> Result<DMatrix<f64>> {
    let t = residuals.nrows();
    if t < 2 {
        return Err(Error::ShapeMismatch(format!("need at least 2 residual rows, got {t}")));
    }
    let denom = match divisor {
        CovarianceDivisor::Observations => t,
        CovarianceDivisor::DegreesOfFreedom(m) => {
            if m >= t {
                return Err(Error::ShapeMismatch(format!("{m} regressors for {t} rows")));
            }
            t - m
        }
    } as f64;
    let s = residuals.transpose() * residuals / denom;
    Ok(crate::linalg::symmetrize(&s))
}

/// Stacks per-equation residual vectors into a T×k block.
pub fn residual_block(equations: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let Some(first) = equations.first() else {
        return Err(Error::ShapeMismatch("no residual series".into()));
    };
    let t = first.len();
    if equations.iter().any(|e| e.len() != t) {
        return Err(Error::ShapeMismatch("residual series differ in length".into()));
    }
    Ok(DMatrix::from_fn(t, equations.len(), |i, j| equations[j][i]))
}

/// ln det of a positive definite matrix.
pub fn ln_det_pd(m: &DMatrix<f64>) -> Result<f64> {
    let chol = cholesky_checked(m).ok_or(Error::SingularCovariance)?;
    let l = chol.l_dirty();
    Ok(2.0 * (0..m.nrows()).map(|i| l[(i, i)].ln()).sum::<f64>())
}

/// Multivariate Gaussian log-likelihood evaluated at the ML covariance.
pub fn gaussian_loglik(cov: &DMatrix<f64>, t_obs: usize) -> Result<f64> {
    let k = cov.nrows() as f64;
    let t = t_obs as f64;
    let ln_det = ln_det_pd(cov)?;
    Ok(-(t * k / 2.0) * (1.0 + (2.0 * std::f64::consts::PI).ln()) - t / 2.0 * ln_det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::Rng;
    use proptest::prelude::*;

    fn with_intercept(cols: &[Vec<f64>]) -> DMatrix<f64> {
        let n = cols[0].len();
        DMatrix::from_fn(n, cols.len() + 1, |i, j| if j == 0 { 1.0 } else { cols[j - 1][i] })
    }

    #[test]
    fn exact_line() {
        let x = with_intercept(&[vec![1.0, 2.0, 3.0]]);
        let fit = ols_fit(&x, &[2.0, 4.0, 6.0]).unwrap();
        assert!(fit.coefficients[0].abs() < 1e-12);
        assert!((fit.coefficients[1] - 2.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn duplicated_column_is_rank_deficient() {
        let c = vec![1.0, 4.0, 2.0, 8.0, 5.0];
        let x = with_intercept(&[c.clone(), c]);
        assert_eq!(ols_fit(&x, &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap_err(), Error::RankDeficient);
    }

    #[test]
    fn shape_errors() {
        let x = DMatrix::from_element(3, 1, 1.0);
        assert!(matches!(ols_fit(&x, &[1.0, 2.0]), Err(Error::ShapeMismatch(_))));
        let x = DMatrix::from_element(2, 2, 1.0);
        assert!(matches!(ols_fit(&x, &[1.0, 2.0]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn random_system_matches_normal_equations() {
        let mut rng = Rng::new(20);
        let x = DMatrix::from_fn(20, 3, |_, _| rng.normal());
        let y: Vec<f64> = (0..20).map(|_| rng.normal()).collect();
        let fit = ols_fit(&x, &y).unwrap();
        let (oracle, _) = crate::oracle::normal_equations(&x, &y);
        for (a, b) in fit.coefficients.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!(!fit.has_intercept);
    }

    #[test]
    fn intercept_regression_matches_reference() {
        let mut rng = Rng::new(21);
        let x = DMatrix::from_fn(30, 4, |_, j| if j == 0 { 1.0 } else { rng.normal() });
        let y: Vec<f64> = (0..30).map(|i| 0.5 + 2.0 * x[(i, 1)] - x[(i, 3)] + rng.normal()).collect();
        let fit = ols_fit(&x, &y).unwrap();
        let (b, se, r2) = crate::oracle::ols_reference(&x, &y);
        assert!(fit.has_intercept);
        for j in 0..4 {
            assert!((fit.coefficients[j] - b[j]).abs() < 1e-10);
            assert!((fit.standard_errors[j] - se[j]).abs() < 1e-10);
        }
        assert!((fit.r_squared - r2).abs() < 1e-10);
    }

    #[test]
    fn covariance_single_equation_is_mean_square() {
        let u = DMatrix::from_column_slice(4, 1, &[1.0, -1.0, 2.0, 0.0]);
        let s = residual_covariance(&u, CovarianceDivisor::Observations).unwrap();
        assert!((s[(0, 0)] - 1.5).abs() < 1e-15);
        let s = residual_covariance(&u, CovarianceDivisor::DegreesOfFreedom(1)).unwrap();
        assert!((s[(0, 0)] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn identical_residuals_give_singular_covariance() {
        let u = DMatrix::from_fn(5, 2, |i, _| i as f64 - 2.0);
        let s = residual_covariance(&u, CovarianceDivisor::Observations).unwrap();
        assert!(s.determinant().abs() < 1e-12);
        assert_eq!(gaussian_loglik(&s, 5).unwrap_err(), Error::SingularCovariance);
    }

    #[test]
    fn covariance_of_simulated_noise() {
        let mut rng = Rng::new(7);
        let rho: f64 = 0.5;
        let u = DMatrix::from_fn(10_000, 2, |_, _| 0.0);
        let mut u = u;
        for i in 0..10_000 {
            let a = rng.normal();
            let b = rng.normal();
            u[(i, 0)] = a;
            u[(i, 1)] = rho * a + (1.0 - rho * rho).sqrt() * b;
        }
        let s = residual_covariance(&u, CovarianceDivisor::Observations).unwrap();
        let truth = [[1.0, 0.5], [0.5, 1.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((s[(i, j)] - truth[i][j]).abs() < 0.05, "{s}");
            }
        }
    }

    #[test]
    fn loglik_values() {
        let one = DMatrix::from_element(1, 1, 1.0);
        assert!((gaussian_loglik(&one, 1).unwrap() + 1.418_939).abs() < 1e-6);
        let eye = DMatrix::<f64>::identity(3, 3);
        let want = -(7.0 * 3.0 / 2.0) * (1.0 + (2.0 * std::f64::consts::PI).ln());
        assert!((gaussian_loglik(&eye, 7).unwrap() - want).abs() < 1e-12);
        // scaling by c lowers the likelihood by (Tk/2) ln c
        let c = 2.5;
        let base = DMatrix::from_row_slice(2, 2, &[2.0, 0.3, 0.3, 1.0]);
        let drop = gaussian_loglik(&base, 10).unwrap() - gaussian_loglik(&(&base * c), 10).unwrap();
        assert!((drop - 10.0 * 2.0 / 2.0 * c.ln()).abs() < 1e-10);
    }

    proptest! {
        #[test]
        fn residuals_orthogonal_and_centred(seed in 0u64..5000, n in 8usize..40, k in 1usize..5) {
            prop_assume!(n > k + 2);
            let mut rng = Rng::new(seed);
            let cols: Vec<Vec<f64>> = (0..k).map(|_| (0..n).map(|_| rng.normal()).collect()).collect();
            let x = with_intercept(&cols);
            let y: Vec<f64> = (0..n).map(|_| 100.0 * rng.normal()).collect();
            let fit = ols_fit(&x, &y).unwrap();
            let scale = y.iter().map(|v| v.abs()).fold(0.0, f64::max);
            for j in 0..x.ncols() {
                let dot: f64 = (0..n).map(|i| x[(i, j)] * fit.residuals[i]).sum();
                prop_assert!(dot.abs() < 1e-8 * scale * n as f64);
            }
            let mean = fit.residuals.iter().sum::<f64>() / n as f64;
            prop_assert!(mean.abs() < 1e-10 * scale);
            for i in 0..x.ncols() {
                prop_assert!((fit.t_statistics[i] - fit.coefficients[i] / fit.standard_errors[i]).abs() < 1e-10 * fit.t_statistics[i].abs().max(1.0));
            }
            let sst: f64 = { let m = y.iter().sum::<f64>() / n as f64; y.iter().map(|v| (v - m).powi(2)).sum() };
            prop_assert!((fit.r_squared - (1.0 - fit.ssr / sst)).abs() < 1e-12);
            prop_assert!(fit.adjusted_r_squared <= fit.r_squared + 1e-15);
        }

        #[test]
        fn linear_combination_is_rank_deficient(seed in 0u64..5000, a in -3.0f64..3.0, b in -3.0f64..3.0) {
            let mut rng = Rng::new(seed);
            let n = 15;
            let c1: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
            let c2: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
            let combo: Vec<f64> = (0..n).map(|i| a * c1[i] + b * c2[i]).collect();
            let x = with_intercept(&[c1, c2, combo]);
            let y: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
            prop_assert_eq!(ols_fit(&x, &y).unwrap_err(), Error::RankDeficient);
        }

        #[test]
        fn loglik_decreasing_in_determinant(seed in 0u64..5000, scale in 1.0001f64..5.0) {
            let mut rng = Rng::new(seed);
            let a = DMatrix::from_fn(3, 3, |_, _| rng.normal());
            let pd = &a * a.transpose() + DMatrix::identity(3, 3) * 0.1;
            // inflate one eigen-direction: determinant strictly grows
            let v = DMatrix::from_fn(3, 1, |_, _| rng.normal());
            let bigger = &pd + &v * v.transpose() * (scale - 1.0);
            prop_assert!(bigger.determinant() > pd.determinant());
            prop_assert!(gaussian_loglik(&bigger, 20).unwrap() < gaussian_loglik(&pd, 20).unwrap());
        }
    }
}
