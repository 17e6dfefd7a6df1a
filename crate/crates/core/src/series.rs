//! Annual series containers and the transforms the estimators consume.
//!
//! A [`Series`] is a named, gap-free run of annual observations. A
//! [`Dataset`] is an ordered panel of series on one shared year axis.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    name: String,
    years: Vec<i32>,
    values: Vec<f64>,
}

impl Series {
    /// Builds a series, rejecting gaps, non-increasing years and non-finite values.
    pub fn new(name: impl Into<String>, years: Vec<i32>, values: Vec<f64>) -> Result<Self> {
        let name = name.into();
        if years.len() != values.len() {
            return Err(Error::LengthMismatch {
                series: name,
                years: years.len(),
                values: values.len(),
            });
        }
        if years.is_empty() {
            return Err(Error::EmptySeries { series: name });
        }
        for w in years.windows(2) {
            if w[1] != w[0] + 1 {
                // report the first missing year when the axis jumps forward
                let year = if w[1] > w[0] { w[0] + 1 } else { w[1] };
                return Err(Error::YearGap { year });
            }
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                series: name,
                year: years[i],
            });
        }
        Ok(Self {
            name,
            years,
            values,
        })
    }

    /// Convenience constructor for a series starting at `first_year`.
    pub fn from_start(name: impl Into<String>, first_year: i32, values: Vec<f64>) -> Result<Self> {
        let years = (0..values.len() as i32).map(|i| first_year + i).collect();
        Self::new(name, years, values)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn years(&self) -> &[i32] {
        &self.years
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first_year(&self) -> i32 {
        self.years[0]
    }

    pub fn last_year(&self) -> i32 {
        self.years[self.years.len() - 1]
    }

    pub fn renamed(&self, name: impl Into<String>) -> Series {
        Series {
            name: name.into(),
            ..self.clone()
        }
    }

    fn slice_years(&self, from: i32, to: i32) -> Series {
        let start = (from - self.first_year()) as usize;
        let end = (to - self.first_year()) as usize + 1;
        Series {
            name: self.name.clone(),
            years: self.years[start..end].to_vec(),
            values: self.values[start..end].to_vec(),
        }
    }
}

/// Natural log of every value; the result is named `l_<name>`.
pub fn log_transform(s: &Series) -> Result<Series> {
    if let Some(i) = s.values.iter().position(|&v| v <= 0.0) {
        return Err(Error::NonPositiveValue {
            series: s.name.clone(),
            year: s.years[i],
        });
    }
    Ok(Series {
        name: format!("l_{}", s.name),
        years: s.years.clone(),
        values: s.values.iter().map(|v| v.ln()).collect(),
    })
}

/// `order`-th difference. The first `order` years are dropped.
pub fn difference(s: &Series, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::InvalidParameter("difference order must be positive".into()));
    }
    if s.len() <= order {
        return Err(Error::SeriesTooShort {
            needed: order,
            got: s.len(),
        });
    }
    let mut values = s.values.clone();
    for _ in 0..order {
        values = values.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Ok(Series {
        name: s.name.clone(),
        years: s.years[order..].to_vec(),
        values,
    })
}

/// Ordered panel of series on one common year axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    years: Vec<i32>,
    variables: Vec<Series>,
}

impl Dataset {
    /// Builds a dataset from series that already share the same year axis.
    pub fn new(variables: Vec<Series>) -> Result<Self> {
        let Some(first) = variables.first() else {
            return Err(Error::NotEnoughVariables { needed: 1, got: 0 });
        };
        let years = first.years.clone();
        for (i, s) in variables.iter().enumerate() {
            if s.years != years {
                return Err(Error::ShapeMismatch(format!(
                    "series `{}` does not share the year axis of `{}`",
                    s.name, first.name
                )));
            }
            if variables[..i].iter().any(|o| o.name == s.name) {
                return Err(Error::DuplicateName(s.name.clone()));
            }
        }
        Ok(Self { years, variables })
    }

    /// Builds a dataset from column-major values starting at `first_year`.
    pub fn from_columns(names: &[&str], first_year: i32, columns: Vec<Vec<f64>>) -> Result<Self> {
        if names.len() != columns.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} names for {} columns",
                names.len(),
                columns.len()
            )));
        }
        let series = names
            .iter()
            .zip(columns)
            .map(|(n, c)| Series::from_start(*n, first_year, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(series)
    }

    pub fn years(&self) -> &[i32] {
        &self.years
    }

    pub fn variables(&self) -> &[Series] {
        &self.variables
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(|s| s.name()).collect()
    }

    /// Number of variables.
    pub fn k(&self) -> usize {
        self.variables.len()
    }

    /// Number of observations per variable.
    pub fn t(&self) -> usize {
        self.years.len()
    }

    pub fn get(&self, name: &str) -> Option<&Series> {
        self.variables.iter().find(|s| s.name == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|s| s.name == name)
    }

    /// Observations as a T×k matrix, columns in variable order.
    pub fn to_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.t(), self.k(), |t, j| self.variables[j].values[t])
    }

    /// Subset of variables in the requested order.
    pub fn select(&self, names: &[&str]) -> Result<Dataset> {
        let vars = names
            .iter()
            .map(|n| {
                self.get(n)
                    .cloned()
                    .ok_or_else(|| Error::UnknownVariable((*n).to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Dataset::new(vars)
    }

    /// First differences of every variable.
    pub fn differenced(&self) -> Result<Dataset> {
        let vars = self
            .variables
            .iter()
            .map(|s| difference(s, 1))
            .collect::<Result<Vec<_>>>()?;
        Dataset::new(vars)
    }
}

/// Restricts the series to their common years, preserving order.
pub fn align(series: &[Series]) -> Result<Dataset> {
    if series.is_empty() {
        return Err(Error::NotEnoughVariables { needed: 1, got: 0 });
    }
    let from = series.iter().map(Series::first_year).max().unwrap();
    let to = series.iter().map(Series::last_year).min().unwrap();
    if from > to {
        return Err(Error::NoCommonYears);
    }
    Dataset::new(series.iter().map(|s| s.slice_years(from, to)).collect())
}

/// Regression blocks for a levels VAR(p) written in error-correction form.
///
/// Row `i` of every block refers to time index `p + i` of the dataset, so all
/// blocks have `T - p` rows.
#[derive(Debug, Clone)]
pub struct LagDesign {
    /// Δy_t, (T−p)×k.
    pub dy: DMatrix<f64>,
    /// y_{t−1}, (T−p)×k.
    pub lagged_levels: DMatrix<f64>,
    /// [Δy_{t−1}, …, Δy_{t−p+1}], (T−p)×k(p−1), grouped by lag then variable.
    pub lagged_diffs: DMatrix<f64>,
    /// Column of ones, (T−p)×1.
    pub intercept: DMatrix<f64>,
    /// Calendar year of each row.
    pub years: Vec<i32>,
    /// Time index (0-based position in the dataset) of each row.
    pub time_index: Vec<usize>,
}

impl LagDesign {
    pub fn rows(&self) -> usize {
        self.dy.nrows()
    }
}

pub fn lag_design(d: &Dataset, p: usize) -> Result<LagDesign> {
    if p == 0 {
        return Err(Error::InvalidParameter("lag order must be at least 1".into()));
    }
    let t_len = d.t();
    if t_len <= p + 1 {
        return Err(Error::SeriesTooShort {
            needed: p + 1,
            got: t_len,
        });
    }
    let k = d.k();
    let rows = t_len - p;
    let y = d.to_matrix();
    let diff = |t: usize, j: usize| y[(t, j)] - y[(t - 1, j)];

    let dy = DMatrix::from_fn(rows, k, |i, j| diff(p + i, j));
    let lagged_levels = DMatrix::from_fn(rows, k, |i, j| y[(p + i - 1, j)]);
    let lagged_diffs = DMatrix::from_fn(rows, k * (p - 1), |i, c| {
        let lag = c / k + 1;
        let j = c % k;
        diff(p + i - lag, j)
    });
    Ok(LagDesign {
        dy,
        lagged_levels,
        lagged_diffs,
        intercept: DMatrix::from_element(rows, 1, 1.0),
        years: d.years[p..].to_vec(),
        time_index: (p..t_len).collect(),
    })
}
