//! Test-only reference computations, kept independent of the QR path.

use nalgebra::DMatrix;

/// Solves the normal equations XᵀX b = Xᵀy by Gaussian elimination with
/// partial pivoting. Returns the coefficients and diag((XᵀX)⁻¹).
pub fn normal_equations(x: &DMatrix<f64>, y: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (n, k) = x.shape();
    // augmented [XᵀX | Xᵀy | I]
    let width = 2 * k + 1;
    let mut a = vec![vec![0.0; width]; k];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = (0..n).map(|r| x[(r, i)] * x[(r, j)]).sum();
        }
        a[i][k] = (0..n).map(|r| x[(r, i)] * y[r]).sum();
        a[i][k + 1 + i] = 1.0;
    }
    for c in 0..k {
        let piv = (c..k).max_by(|&p, &q| a[p][c].abs().total_cmp(&a[q][c].abs())).unwrap();
        a.swap(c, piv);
        let d = a[c][c];
        for v in a[c].iter_mut() {
            *v /= d;
        }
        for r in 0..k {
            if r != c {
                let f = a[r][c];
                if f != 0.0 {
                    for j in 0..width {
                        a[r][j] -= f * a[c][j];
                    }
                }
            }
        }
    }
    let coef = (0..k).map(|i| a[i][k]).collect();
    let inv_diag = (0..k).map(|i| a[i][k + 1 + i]).collect();
    (coef, inv_diag)
}

/// Coefficients, standard errors and R² (centred, intercept assumed in column 0).
pub fn ols_reference(x: &DMatrix<f64>, y: &[f64]) -> (Vec<f64>, Vec<f64>, f64) {
    let (n, k) = x.shape();
    let (b, inv_diag) = normal_equations(x, y);
    let mut ssr = 0.0;
    for r in 0..n {
        let fitted: f64 = (0..k).map(|j| x[(r, j)] * b[j]).sum();
        ssr += (y[r] - fitted).powi(2);
    }
    let mean = y.iter().sum::<f64>() / n as f64;
    let sst: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let s2 = ssr / (n - k) as f64;
    let se = inv_diag.iter().map(|d| (s2 * d).sqrt()).collect();
    (b, se, 1.0 - ssr / sst)
}

/// Univariate Jarque-Bera with population moments.
pub fn jarque_bera(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let m = x.iter().sum::<f64>() / n;
    let m2 = x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / n;
    let m3 = x.iter().map(|v| (v - m).powi(3)).sum::<f64>() / n;
    let m4 = x.iter().map(|v| (v - m).powi(4)).sum::<f64>() / n;
    let s = m3 / m2.powf(1.5);
    let k = m4 / (m2 * m2);
    n / 6.0 * (s * s + (k - 3.0).powi(2) / 4.0)
}
