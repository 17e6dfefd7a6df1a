use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vecmkit::johansen::DetCase;
use vecmkit::series::difference;
use vecmkit::unit_root::{adf_test, AdfLags, AdfResult, Deterministic};
use vecmkit_cli::config::{Format, RunConfig};
use vecmkit_cli::data::{load_csv, LoadOptions};
use vecmkit_cli::error::{CliError, Result, Stage};
use vecmkit_cli::plot::write_plot;
use vecmkit_cli::report::{run_pipeline, write_outputs};
use vecmkit_cli::simulation::{run_simulation, SimulationSpec};

#[derive(Parser)]
#[command(name = "vecmkit", version, about = "Unit roots, cointegration and VECM estimation for annual panels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Overrides {
    /// Significance level.
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// Largest lag considered.
    #[arg(long = "max-lag", global = true)]
    max_lag: Option<usize>,
    /// Deterministic case: 1-5 or a name such as unrestricted_constant for
    /// `run`; none, constant or constant_and_trend for `adf`.
    #[arg(long = "det-case", global = true)]
    det_case: Option<String>,
    /// Output format printed to stdout.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline described by a TOML config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Impose a cointegration rank.
        #[arg(long)]
        rank: Option<usize>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Augmented Dickey-Fuller test on one CSV column.
    Adf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "var")]
        variable: String,
        /// Test the first difference.
        #[arg(long)]
        diff: bool,
        /// Take natural logs first.
        #[arg(long)]
        log: bool,
        /// Fixed lag order instead of Schwarz selection.
        #[arg(long)]
        lags: Option<usize>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Monte Carlo rejection rate of a test under a simulated DGP.
    Simulate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        reps: Option<usize>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Plot CSV columns against the year as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated column names.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_det_case(s: &str) -> Result<DetCase> {
    Ok(match s {
        "1" | "none" => DetCase::None,
        "2" | "restricted_constant" => DetCase::RestrictedConstant,
        "3" | "unrestricted_constant" => DetCase::UnrestrictedConstant,
        "4" | "restricted_trend" => DetCase::RestrictedTrend,
        "5" | "unrestricted_trend" => DetCase::UnrestrictedTrend,
        other => return Err(CliError::Config(format!("unknown Johansen case `{other}`"))),
    })
}

fn parse_deterministic(s: &str) -> Result<Deterministic> {
    Ok(match s {
        "none" | "nc" => Deterministic::None,
        "constant" | "c" => Deterministic::Constant,
        "constant_and_trend" | "ct" => Deterministic::ConstantAndTrend,
        other => return Err(CliError::Config(format!("unknown ADF deterministic case `{other}`"))),
    })
}

#[derive(Serialize)]
struct AdfOutput<'a> {
    variable: &'a str,
    differenced: bool,
    alpha: f64,
    rejects_unit_root: bool,
    result: AdfResult,
}

fn render_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            config,
            rank,
            overrides,
        } => {
            let mut cfg = RunConfig::load(&config)?;
            if let Some(a) = overrides.alpha {
                cfg.alpha = a;
            }
            if let Some(p) = overrides.max_lag {
                cfg.p_max = p;
            }
            if let Some(c) = &overrides.det_case {
                cfg.johansen_case = parse_det_case(c)?;
            }
            if let Some(f) = overrides.format {
                cfg.formats = vec![f.into()];
            }
            if rank.is_some() {
                cfg.rank = rank;
            }
            let report = run_pipeline(&cfg)?;
            write_outputs(&cfg, &report)?;
            print!("{}", report.render(cfg.formats[0]));
        }
        Command::Adf {
            input,
            variable,
            diff,
            log,
            lags,
            overrides,
        } => {
            let opts = LoadOptions {
                variables: vec![variable.clone()],
                log: if log { vec![variable.clone()] } else { vec![] },
            };
            let d = load_csv(&input, &opts)?;
            let mut s = d.variables()[0].clone();
            if diff {
                s = difference(&s, 1).map_err(CliError::at(Stage::UnitRoot))?;
            }
            let det = match &overrides.det_case {
                Some(c) => parse_deterministic(c)?,
                None if diff => Deterministic::Constant,
                None => Deterministic::ConstantAndTrend,
            };
            let lags = match lags {
                Some(l) => AdfLags::Fixed(l),
                None => AdfLags::Auto {
                    max_lags: overrides.max_lag,
                },
            };
            let alpha = overrides.alpha.unwrap_or(0.05);
            let result = adf_test(&s, det, lags).map_err(CliError::at(Stage::UnitRoot))?;
            let out = AdfOutput {
                variable: s.name(),
                differenced: diff,
                alpha,
                rejects_unit_root: result.p_value <= alpha,
                result,
            };
            match overrides.format.map(Format::from).unwrap_or(Format::Text) {
                Format::Json => print!("{}", render_json(&out)),
                Format::Text => {
                    let r = &out.result;
                    println!(
                        "ADF test on {}{} ({}), {} lag(s), {} observations",
                        out.variable,
                        if diff { " (first difference)" } else { "" },
                        r.deterministic.label(),
                        r.lags_used,
                        r.n_effective
                    );
                    println!("statistic {:.6}, p-value {:.6}", r.statistic, r.p_value);
                    println!(
                        "critical values 1%: {:.6}, 5%: {:.6}, 10%: {:.6}",
                        r.critical_values[0], r.critical_values[1], r.critical_values[2]
                    );
                    println!(
                        "{} the unit-root null at the {}% level",
                        if out.rejects_unit_root { "rejects" } else { "does not reject" },
                        vecmkit::percent_label(alpha)
                    );
                }
            }
        }
        Command::Simulate { spec, reps, overrides } => {
            let mut spec = SimulationSpec::load(&spec)?;
            if let Some(r) = reps {
                spec.reps = r;
            }
            if let Some(a) = overrides.alpha {
                spec.alpha = a;
            }
            let report = run_simulation(&spec)?;
            print!("{}", report.render(overrides.format.map(Format::from).unwrap_or(Format::Text)));
        }
        Command::Plot { input, vars, out } => {
            let opts = LoadOptions {
                variables: vars.clone(),
                log: vec![],
            };
            if vars.is_empty() {
                return Err(CliError::Config("--vars needs at least one column".into()));
            }
            let d = load_csv(&input, &opts)?;
            let names: Vec<&str> = vars.iter().map(String::as_str).collect();
            write_plot(&d, &names, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
