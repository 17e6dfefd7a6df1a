use std::fs::File;
use std::path::Path;

use vecmkit::series::{log_transform, Dataset, Series};

use crate::error::{CliError, Result, Stage};

/// Column selection and transforms applied while loading.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LoadOptions {
    /// Columns to keep, in order. Empty keeps every non-year column.
    pub variables: Vec<String>,
    /// Columns to replace by their natural log, renamed `l_<name>`.
    pub log: Vec<String>,
}

/// Raw table: the header and one vector per column.
struct Table {
    header: Vec<String>,
    years: Vec<i32>,
    columns: Vec<Vec<f64>>,
}

fn read_table(path: &Path) -> Result<Table> {
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::FileNotFound(path.to_path_buf()),
        _ => CliError::io(path)(e),
    })?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
    let parse_err = |e: csv::Error| CliError::ParseError {
        line: e.position().map_or(1, |p| p.line()),
        message: e.to_string(),
    };
    let header: Vec<String> = reader.headers().map_err(parse_err)?.iter().map(str::to_string).collect();
    let year_col = header
        .iter()
        .position(|h| h.eq_ignore_ascii_case("year"))
        .ok_or_else(|| CliError::MissingColumn("year".into()))?;
    let mut years = Vec::new();
    let mut columns = vec![Vec::new(); header.len()];
    for record in reader.records() {
        let record = record.map_err(parse_err)?;
        let line = record.position().map_or(0, |p| p.line());
        for (j, field) in record.iter().enumerate() {
            if j == year_col {
                let year = field.parse::<i32>().map_err(|_| CliError::ParseError {
                    line,
                    message: format!("year `{field}` is not an integer"),
                })?;
                years.push(year);
            } else {
                let v = field.parse::<f64>().map_err(|_| CliError::ParseError {
                    line,
                    message: format!("`{field}` in column `{}` is not a number", header[j]),
                })?;
                columns[j].push(v);
            }
        }
    }
    let keep: Vec<usize> = (0..header.len()).filter(|&j| j != year_col).collect();
    Ok(Table {
        header: keep.iter().map(|&j| header[j].clone()).collect(),
        years,
        columns: keep.into_iter().map(|j| std::mem::take(&mut columns[j])).collect(),
    })
}

/// Reads a `year,<var>,…` CSV into a dataset, applying the configured logs.
pub fn load_csv(path: &Path, opts: &LoadOptions) -> Result<Dataset> {
    let table = read_table(path)?;
    let names: Vec<String> = if opts.variables.is_empty() {
        table.header.clone()
    } else {
        opts.variables.clone()
    };
    if names.is_empty() {
        return Err(CliError::MissingColumn("at least one numeric column".into()));
    }
    for name in &opts.log {
        if !names.contains(name) {
            return Err(CliError::MissingColumn(name.clone()));
        }
    }
    let series = names
        .iter()
        .map(|name| {
            let j = table
                .header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| CliError::MissingColumn(name.clone()))?;
            let s = Series::new(name.clone(), table.years.clone(), table.columns[j].clone())
                .map_err(CliError::at(Stage::Load))?;
            if opts.log.contains(name) {
                log_transform(&s).map_err(CliError::at(Stage::Load))
            } else {
                Ok(s)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Dataset::new(series).map_err(CliError::at(Stage::Load))
}
