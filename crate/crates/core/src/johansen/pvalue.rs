//! p-values for the Johansen statistics from the embedded quantile tables.
//!
//! Inside the tabulated range the probit of the p-value is interpolated
//! linearly in the statistic. Beyond the outermost quantiles the tail of a
//! moment-matched gamma distribution is spliced on, scaled to be continuous.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Gamma, Normal};

use super::tables::{Dist, MAX_EIGEN, PROBS, TRACE};
use super::DetCase;
use crate::error::{Error, Result};

/// Largest number of common trends with embedded tables.
pub const MAX_TRENDS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JohansenTest {
    Trace,
    MaxEigen,
}

fn dist(trends: usize, case: DetCase, test: JohansenTest) -> Result<&'static Dist> {
    if trends == 0 || trends > MAX_TRENDS {
        return Err(Error::DimensionUnsupported(trends));
    }
    let table = match test {
        JohansenTest::Trace => &TRACE,
        JohansenTest::MaxEigen => &MAX_EIGEN,
    };
    Ok(&table[case.number() - 1][trends - 1])
}

/// Tabulated critical value at upper-tail `level`, when `level` is on the grid.
pub fn critical_value(trends: usize, case: DetCase, test: JohansenTest, level: f64) -> Result<Option<f64>> {
    let d = dist(trends, case, test)?;
    Ok(PROBS
        .iter()
        .position(|&p| (p - level).abs() < 1e-12)
        .map(|i| d.quantiles[i]))
}

/// Asymptotic p-value of a trace or max-eigen statistic with `trends = k − r`.
pub fn johansen_pvalue(statistic: f64, trends: usize, case: DetCase, test: JohansenTest) -> Result<f64> {
    let d = dist(trends, case, test)?;
    if statistic.is_nan() {
        return Ok(f64::NAN);
    }
    if statistic <= 0.0 {
        return Ok(1.0);
    }
    let q = &d.quantiles;
    let last = q.len() - 1;
    let gamma = Gamma::new(d.mean * d.mean / d.var, d.mean / d.var).expect("positive moments");
    if statistic <= q[0] {
        let p_lo = 1.0 - PROBS[0];
        return Ok(1.0 - p_lo * gamma.cdf(statistic) / gamma.cdf(q[0]));
    }
    if statistic >= q[last] {
        let tail = gamma.sf(statistic) / gamma.sf(q[last]);
        return Ok((PROBS[last] * tail).clamp(0.0, PROBS[last]));
    }
    let i = q.partition_point(|&v| v <= statistic) - 1;
    let normal = Normal::new(0.0, 1.0).expect("valid normal");
    let z0 = normal.inverse_cdf(1.0 - PROBS[i]);
    let z1 = normal.inverse_cdf(1.0 - PROBS[i + 1]);
    let w = if q[i + 1] > q[i] { (statistic - q[i]) / (q[i + 1] - q[i]) } else { 1.0 };
    Ok(1.0 - normal.cdf(z0 + w * (z1 - z0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASES: [DetCase; 5] = [
        DetCase::None,
        DetCase::RestrictedConstant,
        DetCase::UnrestrictedConstant,
        DetCase::RestrictedTrend,
        DetCase::UnrestrictedTrend,
    ];

    #[test]
    fn left_tail() {
        for case in CASES {
            for n in 1..=MAX_TRENDS {
                assert!(johansen_pvalue(0.0, n, case, JohansenTest::Trace).unwrap() >= 0.99);
            }
        }
    }

    #[test]
    fn critical_values_are_consistent() {
        for case in CASES {
            for test in [JohansenTest::Trace, JohansenTest::MaxEigen] {
                for n in 1..=MAX_TRENDS {
                    for level in [0.10, 0.05, 0.01] {
                        let cv = critical_value(n, case, test, level).unwrap().unwrap();
                        let p = johansen_pvalue(cv, n, case, test).unwrap();
                        assert!((p - level).abs() < 1e-9, "{case:?} {test:?} n={n}: {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn far_right_tail() {
        for case in CASES {
            for n in 1..=MAX_TRENDS {
                let cv1 = critical_value(n, case, JohansenTest::Trace, 0.01).unwrap().unwrap();
                assert!(johansen_pvalue(3.0 * cv1, n, case, JohansenTest::Trace).unwrap() < 0.001);
            }
        }
    }

    #[test]
    fn unsupported_dimension() {
        assert_eq!(
            johansen_pvalue(1.0, 13, DetCase::UnrestrictedConstant, JohansenTest::Trace).unwrap_err(),
            Error::DimensionUnsupported(13)
        );
        assert!(johansen_pvalue(1.0, 0, DetCase::UnrestrictedConstant, JohansenTest::Trace).is_err());
    }

    #[test]
    fn monotone_in_statistic() {
        for case in CASES {
            for test in [JohansenTest::Trace, JohansenTest::MaxEigen] {
                for n in [1, 2, 4, 8, 12] {
                    let mut prev = 1.0;
                    for i in 0..4000 {
                        let s = i as f64 * 0.1 * n as f64;
                        let p = johansen_pvalue(s, n, case, test).unwrap();
                        assert!((0.0..=1.0).contains(&p));
                        assert!(p <= prev + 1e-15, "{case:?} {test:?} n={n} s={s}");
                        prev = p;
                    }
                }
            }
        }
    }
}
