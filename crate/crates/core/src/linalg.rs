//! Small dense helpers shared by the estimators.

use nalgebra::{Cholesky, DMatrix, Dyn};

/// Relative pivot tolerance used for rank and definiteness checks.
pub const RANK_TOL: f64 = 1e-10;

/// Cholesky factorization that also rejects numerically semidefinite input.
///
/// A matrix passes when every squared pivot is at least `RANK_TOL²`-relative
/// to the largest diagonal entry.
pub fn cholesky_checked(m: &DMatrix<f64>) -> Option<Cholesky<f64, Dyn>> {
    let max_diag = m.diagonal().iter().cloned().fold(0.0_f64, f64::max);
    if !(max_diag > 0.0) || !m.iter().all(|v| v.is_finite()) {
        return None;
    }
    let chol = Cholesky::new(m.clone())?;
    let l = chol.l_dirty();
    let min_pivot = (0..m.nrows()).map(|i| l[(i, i)] * l[(i, i)]).fold(f64::INFINITY, f64::min);
    if min_pivot <= RANK_TOL * RANK_TOL * max_diag || min_pivot <= 1e-14 * max_diag {
        return None;
    }
    Some(chol)
}

/// Lower Cholesky factor of a positive semidefinite matrix, tolerating zero pivots.
///
/// Columns with a zero pivot are set to zero, so `L Lᵀ` reproduces the input
/// for any PSD matrix, including the zero matrix.
pub fn psd_cholesky(m: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    let n = m.nrows();
    let scale = m.diagonal().iter().cloned().fold(0.0_f64, f64::max);
    let tol = 1e-12 * scale.max(f64::MIN_POSITIVE);
    let mut l = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        let mut d = m[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if d < -tol {
            return None;
        }
        if d <= tol {
            for i in j + 1..n {
                let mut s = m[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                if s.abs() > tol.sqrt() * scale.sqrt().max(1.0) {
                    return None;
                }
            }
            continue;
        }
        let djj = d.sqrt();
        l[(j, j)] = djj;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / djj;
        }
    }
    Some(l)
}

/// Horizontal concatenation of blocks sharing a row count.
pub fn hstack(blocks: &[&DMatrix<f64>]) -> DMatrix<f64> {
    let rows = blocks.iter().map(|b| b.nrows()).max().unwrap_or(0);
    let cols: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = DMatrix::zeros(rows, cols);
    let mut c = 0;
    for b in blocks {
        debug_assert_eq!(b.nrows(), rows);
        out.view_mut((0, c), (rows, b.ncols())).copy_from(b);
        c += b.ncols();
    }
    out
}

/// Symmetric part, removes round-off asymmetry.
pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}
