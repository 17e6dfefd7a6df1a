use std::path::{Path, PathBuf};
use std::process::Command;

use vecmkit::johansen::DetCase;
use vecmkit::simulate::{generate, DgpSpec};
use vecmkit::Error;
use vecmkit_cli::report::run_on_dataset;
use vecmkit_cli::{load_csv, render_plot, run_pipeline, CliError, Format, LoadOptions, RunConfig, Stage};

fn sample_csv() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/agri_credit_sample.csv")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn opts(vars: &[&str], log: &[&str]) -> LoadOptions {
    LoadOptions {
        variables: vars.iter().map(|s| s.to_string()).collect(),
        log: log.iter().map(|s| s.to_string()).collect(),
    }
}

fn sample_config(out: &Path) -> RunConfig {
    let mut cfg = RunConfig::from_toml(&format!("input = {:?}", sample_csv().display().to_string())).unwrap();
    cfg.variables = ["gdp", "ac", "gcf", "inf"].map(String::from).to_vec();
    cfg.log = cfg.variables.clone();
    cfg.normalize_on = Some("gdp".into());
    cfg.output_dir = out.to_path_buf();
    cfg
}

#[test]
fn sample_loads_with_log_names() {
    let d = load_csv(&sample_csv(), &opts(&[], &["gdp", "ac", "gcf", "inf"])).unwrap();
    assert_eq!(d.k(), 4);
    assert_eq!(d.t(), 25);
    assert_eq!(d.names(), ["l_gdp", "l_ac", "l_gcf", "l_inf"]);
    assert_eq!(d.years()[0], 1997);
    assert!((d.variables()[1].values()[0] - 15.17_f64.ln()).abs() < 1e-12);
}

#[test]
fn missing_column_is_reported() {
    let err = load_csv(&sample_csv(), &opts(&["gdp", "nope"], &[])).unwrap_err();
    assert!(matches!(&err, CliError::MissingColumn(c) if c == "nope"));
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn year_gap_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "gap.csv", "year,a\n2003,1\n2004,2\n2006,3\n2007,4\n");
    let err = load_csv(&p, &opts(&[], &[])).unwrap_err();
    assert!(
        matches!(&err, CliError::Stage { stage: Stage::Load, source: Error::YearGap { year } } if *year == 2005),
        "{err:?}"
    );
}

#[test]
fn bad_field_names_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.csv", "year,a\n2000,1\n2001,abc\n");
    let err = load_csv(&p, &opts(&[], &[])).unwrap_err();
    assert!(matches!(err, CliError::ParseError { line: 3, .. }), "{err:?}");
}

#[test]
fn log_of_non_positive_fails() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "neg.csv", "year,a\n2000,1\n2001,0\n2002,2\n");
    let err = load_csv(&p, &opts(&[], &["a"])).unwrap_err();
    assert!(
        matches!(&err, CliError::Stage { source: Error::NonPositiveValue { year: 2001, .. }, .. }),
        "{err:?}"
    );
}

#[test]
fn missing_input_file() {
    let err = load_csv(Path::new("/nonexistent/x.csv"), &opts(&[], &[])).unwrap_err();
    assert!(matches!(err, CliError::FileNotFound(_)));
}

#[test]
fn single_variable_cannot_be_cointegrated() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = sample_config(dir.path());
    cfg.variables = vec!["gdp".into()];
    cfg.log = cfg.variables.clone();
    let err = run_pipeline(&cfg).unwrap_err();
    assert!(
        matches!(&err, CliError::Stage { stage: Stage::Johansen, source: Error::NotEnoughVariables { .. } }),
        "{err:?}"
    );
    assert_eq!(err.exit_code(), 6);
}

#[test]
fn json_and_text_agree_to_six_decimals() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_pipeline(&sample_config(dir.path())).unwrap();
    let text = report.render(Format::Text);
    let json: serde_json::Value = serde_json::from_str(&report.render(Format::Json)).unwrap();
    let eigs = json["johansen_table"]["values"]["result"]["eigenvalues"].as_array().unwrap();
    for e in eigs {
        let shown = format!("{:.6}", e.as_f64().unwrap());
        assert!(text.contains(&shown), "{shown} missing from text");
    }
    let rendering = json["long_run_equation"]["values"]["equation"]["rendering"].as_str().unwrap();
    assert!(text.lines().any(|l| l == rendering));
    let chi = json["heteroskedasticity"]["values"]["chi_sq"].as_f64().unwrap();
    assert!(text.contains(&format!("{chi:.6}")));
}

#[test]
fn rank_override_above_k_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = sample_config(dir.path());
    cfg.rank = Some(4);
    assert!(run_pipeline(&cfg).is_err());
}

#[test]
fn simulated_rank_one_system_gives_one_relation() {
    let spec = DgpSpec::cointegrated(
        vec![vec![-0.4], vec![0.0], vec![0.0]],
        vec![vec![1.0], vec![-1.0], vec![0.5]],
        200,
        17,
    );
    let d = generate(&spec).unwrap();
    let mut cfg = RunConfig::from_toml("input = \"unused.csv\"").unwrap();
    cfg.johansen_case = DetCase::RestrictedConstant;
    cfg.p_max = 2;
    let report = run_on_dataset(&cfg, &d).unwrap();
    let j = &report.johansen_table.values;
    assert_eq!(j.trace_rank, 1);
    assert_eq!(j.rank_used, 1);
    let eq = report.long_run_equation.values.equation.as_ref().unwrap();
    assert_eq!(eq.normalized_on, "y1");
    // y1 = y2 - 0.5 y3 in the long run
    assert!((eq.coefficients[0].1 - 1.0).abs() < 0.1, "{:?}", eq.coefficients);
    assert!((eq.coefficients[1].1 + 0.5).abs() < 0.1, "{:?}", eq.coefficients);
    let vecm = &report.vecm_table.values;
    assert_eq!(vecm.rank, 1);
    let ec_terms = vecm.equations[0].terms.iter().filter(|t| t.name.starts_with("EC")).count();
    assert_eq!(ec_terms, 1);
}

#[test]
fn plot_has_one_line_per_variable() {
    let d = load_csv(&sample_csv(), &opts(&["gdp", "ac"], &[])).unwrap();
    let svg = render_plot(&d, &["gdp", "ac"]).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert_eq!(svg.matches("class=\"x-tick\"").count(), 25);
    assert_eq!(svg, render_plot(&d, &["gdp", "ac"]).unwrap());
}

#[test]
fn plot_rejects_empty_and_unknown_selection() {
    let d = load_csv(&sample_csv(), &opts(&["gdp", "ac"], &[])).unwrap();
    assert!(matches!(render_plot(&d, &[]), Err(CliError::Stage { stage: Stage::Output, .. })));
    assert!(matches!(
        render_plot(&d, &["zzz"]),
        Err(CliError::Stage { source: Error::UnknownVariable(_), .. })
    ));
}

fn vecmkit(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_vecmkit")).args(args).output().unwrap()
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let csv = sample_csv();
    let csv = csv.to_str().unwrap();

    let ok = vecmkit(&["adf", "--input", csv, "--var", "gdp", "--log", "--format", "json"]);
    assert!(ok.status.success());
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["variable"], "l_gdp");

    let missing = vecmkit(&["adf", "--input", csv, "--var", "nope"]);
    assert_eq!(missing.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: "));

    let bad_alpha = write(
        dir.path(),
        "a.toml",
        &format!("input = {csv:?}\nalpha = 0.9\noutput_dir = {:?}\n", dir.path().display().to_string()),
    );
    assert_eq!(vecmkit(&["run", "--config", bad_alpha.to_str().unwrap()]).status.code(), Some(2));

    let one_var = write(
        dir.path(),
        "b.toml",
        &format!(
            "input = {csv:?}\nvariables = [\"gdp\"]\noutput_dir = {:?}\n",
            dir.path().display().to_string()
        ),
    );
    assert_eq!(vecmkit(&["run", "--config", one_var.to_str().unwrap()]).status.code(), Some(6));

    assert_eq!(vecmkit(&["run", "--config", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn run_writes_all_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = sample_csv();
    let cfg = write(
        dir.path(),
        "c.toml",
        &format!(
            "input = {:?}\nlog = [\"gdp\", \"ac\", \"gcf\", \"inf\"]\noutput_dir = \"out\"\nplot_variables = [\"gdp\"]\n",
            csv.to_str().unwrap()
        ),
    );
    let out = vecmkit(&["run", "--config", cfg.to_str().unwrap(), "--rank", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for f in ["report.json", "report.txt", "trends.svg"] {
        assert!(dir.path().join("out").join(f).is_file(), "{f}");
    }
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("out/report.json")).unwrap()).unwrap();
    assert_eq!(json["vecm_table"]["values"]["rank"], 1);
    assert_eq!(json["johansen_table"]["values"]["rank_overridden"], true);
}
