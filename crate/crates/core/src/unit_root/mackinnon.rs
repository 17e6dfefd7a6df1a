//! Dickey-Fuller p-values from MacKinnon's response surfaces.
//!
//! Asymptotic p-values use the MacKinnon (1994) probit surfaces for a single
//! I(1) series (N = 1), with the coefficient set distributed in statsmodels'
//! `adfvalues` module. Finite-sample critical values at 1%, 5% and 10% use the
//! MacKinnon (2010) response surfaces `τ∞ + τ₁/T + τ₂/T² + τ₃/T³`.
//!
//! For a given effective sample the statistic is shifted by the gap between
//! the finite-sample and asymptotic critical values (piecewise linear between
//! the three quantiles, constant outside) before the asymptotic surface is
//! evaluated, so a statistic equal to a finite-sample critical value maps to
//! that critical value's level.

use statrs::distribution::{ContinuousCDF, Normal};

use super::Deterministic;

struct Surface {
    /// Below this statistic the p-value is 0.
    tau_min: f64,
    /// Above this statistic the p-value is 1.
    tau_max: f64,
    /// Switch point between the small-p and large-p polynomials.
    tau_star: f64,
    small_p: [f64; 3],
    large_p: [f64; 4],
    /// Rows for 1%, 5%, 10%: τ∞, τ₁, τ₂, τ₃.
    finite: [[f64; 4]; 3],
}

const NO_CONSTANT: Surface = Surface {
    tau_min: -19.04,
    tau_max: f64::INFINITY,
    tau_star: -1.04,
    small_p: [0.6344, 1.2378, 3.2496e-2],
    large_p: [0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2],
    finite: [
        [-2.56574, -2.2358, -3.627, 0.0],
        [-1.94100, -0.2686, -3.365, 31.223],
        [-1.61682, 0.2656, -2.714, 25.364],
    ],
};

const CONSTANT: Surface = Surface {
    tau_min: -18.83,
    tau_max: 2.74,
    tau_star: -1.61,
    small_p: [2.1659, 1.4412, 3.8269e-2],
    large_p: [1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2],
    finite: [
        [-3.43035, -6.5393, -16.786, -79.433],
        [-2.86154, -2.8903, -4.234, -40.040],
        [-2.56677, -1.5384, -2.809, 0.0],
    ],
};

const CONSTANT_TREND: Surface = Surface {
    tau_min: -16.18,
    tau_max: 0.7,
    tau_star: -2.89,
    small_p: [3.2512, 1.6047, 4.9588e-2],
    large_p: [2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2],
    finite: [
        [-3.95877, -9.0531, -28.428, -134.155],
        [-3.41049, -4.3904, -9.036, -45.374],
        [-3.12705, -2.5856, -3.925, -22.380],
    ],
};

/// Levels of the tabulated critical values.
pub const CRITICAL_LEVELS: [f64; 3] = [0.01, 0.05, 0.10];

fn surface(det: Deterministic) -> &'static Surface {
    match det {
        Deterministic::None => &NO_CONSTANT,
        Deterministic::Constant => &CONSTANT,
        Deterministic::ConstantAndTrend => &CONSTANT_TREND,
    }
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("valid normal")
}

/// First maximum of the large-p cubic above `tau_star`, or infinity.
///
/// The constant-and-trend cubic turns down just below `tau_max`; holding it
/// at its peak keeps the p-value monotone.
fn large_p_peak(s: &Surface) -> f64 {
    let [_, b, c, d] = s.large_p;
    // derivative b + 2c x + 3d x²
    let (qa, qb, qc) = (3.0 * d, 2.0 * c, b);
    let roots: Vec<f64> = if qa == 0.0 {
        if qb == 0.0 { vec![] } else { vec![-qc / qb] }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            vec![]
        } else {
            vec![(-qb - disc.sqrt()) / (2.0 * qa), (-qb + disc.sqrt()) / (2.0 * qa)]
        }
    };
    roots
        .into_iter()
        .filter(|&r| r > s.tau_star && 2.0 * qa * r + qb < 0.0)
        .fold(f64::INFINITY, f64::min)
}

/// Asymptotic p-value of a Dickey-Fuller t statistic.
pub fn asymptotic_pvalue(statistic: f64, det: Deterministic) -> f64 {
    let s = surface(det);
    if statistic.is_nan() {
        return f64::NAN;
    }
    if statistic > s.tau_max {
        return 1.0;
    }
    if statistic < s.tau_min {
        return 0.0;
    }
    let x = statistic;
    let z = if x <= s.tau_star {
        s.small_p[0] + s.small_p[1] * x + s.small_p[2] * x * x
    } else {
        let x = x.min(large_p_peak(s));
        s.large_p[0] + s.large_p[1] * x + s.large_p[2] * x * x + s.large_p[3] * x * x * x
    };
    std_normal().cdf(z).clamp(0.0, 1.0)
}

/// Finite-sample critical values at 1%, 5% and 10% for `n_effective` observations.
///
/// `n_effective = 0` yields the asymptotic values.
pub fn critical_values(det: Deterministic, n_effective: usize) -> [f64; 3] {
    let s = surface(det);
    let inv = if n_effective == 0 { 0.0 } else { 1.0 / n_effective as f64 };
    s.finite.map(|c| c[0] + c[1] * inv + c[2] * inv * inv + c[3] * inv * inv * inv)
}

/// p-value of a Dickey-Fuller t statistic for a regression on `n_effective`
/// observations (0 means asymptotic).
pub fn mackinnon_pvalue(statistic: f64, det: Deterministic, n_effective: usize) -> f64 {
    if n_effective == 0 {
        return asymptotic_pvalue(statistic, det);
    }
    let s = surface(det);
    let finite = critical_values(det, n_effective);
    let shift: [f64; 3] = std::array::from_fn(|i| finite[i] - s.finite[i][0]);
    let delta = if statistic <= finite[0] {
        shift[0]
    } else if statistic >= finite[2] {
        shift[2]
    } else {
        let i = if statistic <= finite[1] { 0 } else { 1 };
        let w = (statistic - finite[i]) / (finite[i + 1] - finite[i]);
        shift[i] + w * (shift[i + 1] - shift[i])
    };
    asymptotic_pvalue(statistic - delta, det)
}
