//! The end-to-end pipeline and its report.
//!
//! Every section keeps the machine-readable values next to a text rendering
//! printed with six decimals from those same values.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use vecmkit::diagnostics::{
    multivariate_jb, white_system_test, ChiSquareStat, ComponentNormality, HeteroskedasticityResult, NormalityResult,
    Verdict,
};
use vecmkit::johansen::{johansen_at, normalize_long_run, rank_decision, DetCase, JohansenResult, LongRunEquation};
use vecmkit::series::Dataset;
use vecmkit::unit_root::{classify_integration, ClassifyConfig, IntegrationDecision, IntegrationOrder};
use vecmkit::var_select::{select_lag, LagSelectionTable};
use vecmkit::vecm::{disequilibrium_correction, vecm_fit_with, Correction, EcLayout, VecmModel};
use vecmkit::percent_label as percent;

use crate::config::{Format, RunConfig};
use crate::data::{load_csv, LoadOptions};
use crate::error::{CliError, Result, Stage};
use crate::plot::write_plot;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section<T> {
    pub values: T,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdfSection {
    pub alpha: f64,
    pub rows: Vec<IntegrationDecision>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JohansenSection {
    pub result: JohansenResult,
    pub trace_rank: usize,
    pub max_eigen_rank: usize,
    /// Rank carried into the long-run and VECM stages.
    pub rank_used: usize,
    pub rank_overridden: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LongRunSection {
    /// Absent when no cointegrating relation is retained.
    pub equation: Option<LongRunEquation>,
    pub vector_index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Term {
    pub name: String,
    pub coefficient: f64,
    pub standard_error: f64,
    pub t_statistic: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquationValues {
    pub dependent: String,
    pub terms: Vec<Term>,
    pub r_squared: f64,
    pub adjusted_r_squared: f64,
    pub f_statistic: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VecmSection {
    pub rank: usize,
    pub lags: usize,
    pub det_case: DetCase,
    pub layout: EcLayout,
    pub alpha: f64,
    pub t_effective: usize,
    pub equations: Vec<EquationValues>,
    /// Equation whose EC loadings are read as disequilibrium corrections.
    pub target: String,
    pub corrections: Vec<Correction>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub input: String,
    pub variables: Vec<String>,
    pub first_year: i32,
    pub last_year: i32,
    pub observations: usize,
    pub warnings: Vec<String>,
    pub adf_table: Section<AdfSection>,
    pub lag_table: Section<LagSelectionTable>,
    pub johansen_table: Section<JohansenSection>,
    pub long_run_equation: Section<LongRunSection>,
    pub vecm_table: Section<VecmSection>,
    pub heteroskedasticity: Section<HeteroskedasticityResult>,
    pub normality: Section<NormalityResult>,
}

pub fn render_adf(s: &AdfSection) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14}{:>14}{:>12}{:>6}{:>14}{:>12}{:>6}  {}",
        "Variable", "Level ADF", "p-value", "lags", "Diff ADF", "p-value", "lags", "Decision"
    );
    for r in &s.rows {
        let _ = writeln!(
            out,
            "{:<14}{:>14.6}{:>12.6}{:>6}{:>14.6}{:>12.6}{:>6}  {}",
            r.variable,
            r.level.statistic,
            r.level.p_value,
            r.level.lags_used,
            r.first_difference.statistic,
            r.first_difference.p_value,
            r.first_difference.lags_used,
            r.order.label()
        );
    }
    if let Some(r) = s.rows.first() {
        let _ = write!(
            out,
            "Level regressions: {}; difference regressions: {}; decisions at the {}% level",
            r.level.deterministic.label(),
            r.first_difference.deterministic.label(),
            percent(s.alpha)
        );
    }
    out
}

pub fn render_lags(t: &LagSelectionTable) -> String {
    let star = |on: bool| if on { "*" } else { " " };
    let mut out = String::new();
    let _ = writeln!(out, "{:>4}{:>16}{:>16}{:>16}{:>16}", "Lag", "LogL", "AIC", "SC", "HQ");
    for r in &t.rows {
        let _ = writeln!(
            out,
            "{:>4}{:>16.6}{:>15.6}{}{:>15.6}{}{:>15.6}{}",
            r.p,
            r.loglik,
            r.aic,
            star(r.p == t.starred.aic),
            r.sc,
            star(r.p == t.starred.sc),
            r.hq,
            star(r.p == t.starred.hq)
        );
    }
    let _ = write!(
        out,
        "* lag chosen by the criterion; recommended lag {} ({:?} rule), {} observations",
        t.recommended, t.rule, t.t_effective
    );
    out
}

pub fn render_long_run(s: &LongRunSection, rank: usize) -> String {
    match &s.equation {
        Some(eq) => format!(
            "{}\n(cointegrating vector {} of {rank}, normalized on {})",
            eq.rendering,
            s.vector_index + 1,
            eq.normalized_on
        ),
        None => "No cointegrating relation retained; no long-run equation.".to_string(),
    }
}

pub fn render_heteroskedasticity(h: &HeteroskedasticityResult, alpha: f64) -> String {
    let verdict = match h.verdict {
        Verdict::Homoscedastic => "homoscedastic",
        Verdict::Heteroscedastic => "heteroscedastic",
    };
    format!(
        "Joint test, levels and squares, no cross terms\n{:>14}{:>8}{:>12}\n{:>14.6}{:>8}{:>12.6}\nResiduals are {verdict} at the {}% level ({} observations)",
        "Chi-sq",
        "df",
        "Prob.",
        h.chi_sq,
        h.df,
        h.p_value,
        percent(alpha),
        h.n_obs
    )
}

pub fn render_normality(n: &NormalityResult) -> String {
    let mut out = String::from("Orthogonalization: Cholesky (variable order)\n");
    type Pick = fn(&ComponentNormality) -> (Option<f64>, ChiSquareStat);
    let blocks: [(&str, Pick, ChiSquareStat); 3] = [
        ("Skewness", |c| (Some(c.skewness), c.skewness_test), n.joint_skewness),
        ("Kurtosis", |c| (Some(c.kurtosis), c.kurtosis_test), n.joint_kurtosis),
        ("Jarque-Bera", |c| (None, c.jarque_bera), n.joint_jarque_bera),
    ];
    for (name, get, joint) in blocks {
        let _ = writeln!(out, "{:<11}{:>14}{:>14}{:>6}{:>12}", "Component", name, "Chi-sq", "df", "Prob.");
        for c in &n.components {
            let (moment, stat) = get(c);
            let moment = moment.map_or(String::new(), |m| format!("{m:.6}"));
            let _ = writeln!(
                out,
                "{:<11}{:>14}{:>14.6}{:>6}{:>12.6}",
                c.component, moment, stat.statistic, stat.df, stat.p_value
            );
        }
        let _ = writeln!(
            out,
            "{:<11}{:>14}{:>14.6}{:>6}{:>12.6}",
            "Joint", "", joint.statistic, joint.df, joint.p_value
        );
    }
    let _ = write!(out, "{} observations", n.n_obs);
    out
}

fn vecm_values(model: &VecmModel, target: &str) -> VecmSection {
    let equations = model
        .equations
        .iter()
        .map(|e| EquationValues {
            dependent: e.dependent.clone(),
            terms: e
                .regressors
                .iter()
                .enumerate()
                .map(|(i, name)| Term {
                    name: name.clone(),
                    coefficient: e.fit.coefficients[i],
                    standard_error: e.fit.standard_errors[i],
                    t_statistic: e.fit.t_statistics[i],
                    significant: e.significant[i],
                })
                .collect(),
            r_squared: e.fit.r_squared,
            adjusted_r_squared: e.fit.adjusted_r_squared,
            f_statistic: e.fit.f_statistic,
        })
        .collect();
    let corrections = model.equation(target).map(disequilibrium_correction).unwrap_or_default();
    VecmSection {
        rank: model.rank,
        lags: model.lags,
        det_case: model.det_case,
        layout: model.layout,
        alpha: model.significance,
        t_effective: model.t_effective,
        equations,
        target: target.to_string(),
        corrections,
    }
}

fn render_vecm(model: &VecmModel, s: &VecmSection) -> String {
    let mut out = format!(
        "VECM with rank {}, {} lag(s) in levels, {}, {} observations\n",
        s.rank,
        s.lags,
        s.det_case.label(),
        s.t_effective
    );
    out.push_str(&model.render());
    for c in &s.corrections {
        let _ = write!(
            out,
            "\n{} in d_{}: loading {:.6}, {:.6}% of the previous disequilibrium corrected per year{}",
            c.term,
            s.target,
            c.loading,
            c.percentage,
            if c.significant { " (significant)" } else { "" }
        );
    }
    out
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "Input: {}\nVariables: {}\nSample: {}-{} ({} observations)\n",
            self.input,
            self.variables.join(", "),
            self.first_year,
            self.last_year,
            self.observations
        );
        for w in &self.warnings {
            let _ = writeln!(out, "WARNING: {w}");
        }
        let sections: [(&str, &str); 7] = [
            ("Unit root tests", &self.adf_table.text),
            ("VAR lag order selection", &self.lag_table.text),
            ("Johansen cointegration test", &self.johansen_table.text),
            ("Long-run equation", &self.long_run_equation.text),
            ("Vector error correction estimates", &self.vecm_table.text),
            ("Residual heteroskedasticity", &self.heteroskedasticity.text),
            ("Residual normality", &self.normality.text),
        ];
        for (title, body) in sections {
            let _ = write!(out, "\n== {title} ==\n{body}\n");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// Runs every stage on the configured input.
pub fn run_pipeline(cfg: &RunConfig) -> Result<PipelineReport> {
    cfg.validate()?;
    let opts = LoadOptions {
        variables: cfg.variables.clone(),
        log: cfg.log.clone(),
    };
    let d = load_csv(&cfg.input, &opts)?;
    run_on_dataset(cfg, &d)
}

pub fn run_on_dataset(cfg: &RunConfig, d: &Dataset) -> Result<PipelineReport> {
    let alpha = cfg.alpha;
    let mut warnings = Vec::new();

    let classify = ClassifyConfig {
        level_det: cfg.adf_level,
        diff_det: cfg.adf_difference,
        max_lags: cfg.adf_max_lags,
    };
    let rows = d
        .variables()
        .iter()
        .map(|s| classify_integration(s, alpha, classify))
        .collect::<vecmkit::Result<Vec<_>>>()
        .map_err(CliError::at(Stage::UnitRoot))?;
    let not_i1: Vec<String> = rows
        .iter()
        .filter(|r| r.order != IntegrationOrder::I1)
        .map(|r| format!("{} ({})", r.variable, r.order.label()))
        .collect();
    if !not_i1.is_empty() {
        if cfg.require_i1 {
            return Err(CliError::NotIntegrated(not_i1));
        }
        warnings.push(format!(
            "not I(1) at the {}% level: {}; cointegration results assume I(1) inputs",
            percent(alpha),
            not_i1.join(", ")
        ));
    }
    let adf = AdfSection { alpha, rows };
    let adf_table = Section {
        text: render_adf(&adf),
        values: adf,
    };
    if d.k() < 2 {
        return Err(CliError::Stage {
            stage: Stage::Johansen,
            source: vecmkit::Error::NotEnoughVariables { needed: 2, got: d.k() },
        });
    }

    let lags = select_lag(d, cfg.p_max, cfg.lag_rule).map_err(CliError::at(Stage::LagSelection))?;
    let p = lags.recommended;
    let lag_table = Section {
        text: render_lags(&lags),
        values: lags,
    };

    let jo = johansen_at(d, p, cfg.johansen_case, alpha).map_err(CliError::at(Stage::Johansen))?;
    let decision = rank_decision(&jo, alpha);
    let rank = match cfg.rank {
        Some(r) if r >= d.k() => {
            return Err(CliError::Stage {
                stage: Stage::Johansen,
                source: vecmkit::Error::RankOutOfRange { rank: r, k: d.k() },
            })
        }
        Some(r) => r,
        None => decision.trace_rank,
    };
    let rank = if cfg.rank.is_none() && rank == d.k() {
        warnings.push(format!(
            "trace test rejects every rank up to {}, suggesting stationary levels; using rank {}",
            d.k() - 1,
            d.k() - 1
        ));
        d.k() - 1
    } else {
        rank
    };
    let mut jtext = decision.table.clone();
    if cfg.rank.is_some() {
        let _ = write!(jtext, "\nRank {rank} imposed by configuration");
    }
    let target = cfg
        .normalize_on
        .as_deref()
        .map(|v| cfg.analysed_name(v))
        .unwrap_or_else(|| d.names()[0].to_string());
    let johansen_table = Section {
        text: jtext,
        values: JohansenSection {
            trace_rank: decision.trace_rank,
            max_eigen_rank: decision.max_eigen_rank,
            rank_used: rank,
            rank_overridden: cfg.rank.is_some(),
            result: jo,
        },
    };

    let equation = if rank >= 1 {
        Some(normalize_long_run(&johansen_table.values.result, &target, 0).map_err(CliError::at(Stage::LongRun))?)
    } else {
        None
    };
    let long_run = LongRunSection {
        equation,
        vector_index: 0,
    };
    let long_run_equation = Section {
        text: render_long_run(&long_run, rank),
        values: long_run,
    };

    let model = vecm_fit_with(d, p, rank, cfg.johansen_case, alpha, cfg.ec_layout).map_err(CliError::at(Stage::Vecm))?;
    let vecm = vecm_values(&model, &target);
    let vecm_table = Section {
        text: render_vecm(&model, &vecm),
        values: vecm,
    };

    let hetero = white_system_test(&model.residuals, &model.regressors, alpha).map_err(CliError::at(Stage::Diagnostics))?;
    let normal = multivariate_jb(&model.residuals).map_err(CliError::at(Stage::Diagnostics))?;

    Ok(PipelineReport {
        input: cfg.input.display().to_string(),
        variables: d.names().iter().map(|s| s.to_string()).collect(),
        first_year: d.years()[0],
        last_year: *d.years().last().unwrap(),
        observations: d.t(),
        warnings,
        adf_table,
        lag_table,
        johansen_table,
        long_run_equation,
        vecm_table,
        heteroskedasticity: Section {
            text: render_heteroskedasticity(&hetero, alpha),
            values: hetero,
        },
        normality: Section {
            text: render_normality(&normal),
            values: normal,
        },
    })
}

/// Writes `report.<ext>` for each configured format and the optional plot.
pub fn write_outputs(cfg: &RunConfig, report: &PipelineReport) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(&cfg.output_dir).map_err(CliError::io(&cfg.output_dir))?;
    let mut written = Vec::new();
    for &format in &cfg.formats {
        let path = cfg.output_dir.join(format!("report.{}", format.extension()));
        std::fs::write(&path, report.render(format)).map_err(CliError::io(&path))?;
        written.push(path);
    }
    if cfg.plot {
        let columns: Vec<String> = if cfg.plot_variables.is_empty() {
            cfg.variables.clone()
        } else {
            cfg.plot_variables.clone()
        };
        let raw = load_csv(
            &cfg.input,
            &LoadOptions {
                variables: columns.clone(),
                log: Vec::new(),
            },
        )?;
        let names: Vec<&str> = raw.names();
        let path = cfg.output_dir.join("trends.svg");
        write_plot(&raw, &names, &path)?;
        written.push(path);
    }
    Ok(written)
}
