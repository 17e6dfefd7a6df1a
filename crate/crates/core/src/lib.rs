//! Unit-root testing, VAR lag selection, Johansen cointegration and VECM
//! estimation for short annual macroeconomic panels.

pub mod diagnostics;
pub mod error;
pub mod johansen;
pub mod linalg;
pub mod linreg;
pub mod series;
pub mod simulate;
pub mod unit_root;
pub mod var_select;
pub mod vecm;

#[cfg(test)]
mod oracle;

pub use error::{Error, Result};
pub use series::{align, Dataset, Series};

/// Significance level as a percentage label without float noise: 5, 2.5, 10.
pub fn percent_label(alpha: f64) -> String {
    let s = format!("{:.4}", alpha * 100.0);
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
