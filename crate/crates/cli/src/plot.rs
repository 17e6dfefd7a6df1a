//! Line chart of dataset columns over the year axis as standalone SVG.

use std::fmt::Write as _;
use std::path::Path;

use vecmkit::series::Dataset;

use crate::error::{CliError, Result, Stage};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 450.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 80.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];
/// Magnitude ratio above which the smaller series move to a second y-axis.
pub const DUAL_AXIS_RATIO: f64 = 100.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn tick_label(v: f64, span: f64) -> String {
    let decimals = if span >= 100.0 {
        0
    } else if span >= 1.0 {
        2
    } else {
        4
    };
    format!("{v:.decimals$}")
}

struct Axis {
    lo: f64,
    hi: f64,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64>) -> Axis {
        let (mut lo, mut hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
        if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            lo -= 1.0;
            hi += 1.0;
        }
        let pad = 0.05 * (hi - lo);
        Axis {
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    fn y(&self, v: f64) -> f64 {
        TOP + (HEIGHT - TOP - BOTTOM) * (self.hi - v) / (self.hi - self.lo)
    }
}

/// Renders the named columns; deterministic for identical input.
pub fn render_plot(d: &Dataset, variables: &[&str]) -> Result<String> {
    if variables.is_empty() {
        return Err(CliError::Stage {
            stage: Stage::Output,
            source: vecmkit::Error::InvalidParameter("no variables selected for the plot".into()),
        });
    }
    let series = variables
        .iter()
        .map(|name| {
            d.get(name).ok_or_else(|| CliError::Stage {
                stage: Stage::Output,
                source: vecmkit::Error::UnknownVariable(name.to_string()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let magnitude: Vec<f64> = series
        .iter()
        .map(|s| s.values().iter().fold(0.0_f64, |m, v| m.max(v.abs())))
        .collect();
    let largest = magnitude.iter().cloned().fold(0.0, f64::max);
    // true: plotted against the right axis
    let right: Vec<bool> = magnitude.iter().map(|&m| m * DUAL_AXIS_RATIO < largest).collect();
    let dual = right.iter().any(|&r| r);
    let axis_for = |side: bool| {
        Axis::fit(
            series
                .iter()
                .zip(&right)
                .filter(|(_, &r)| r == side)
                .flat_map(|(s, _)| s.values().iter().copied()),
        )
    };
    let left_axis = axis_for(false);
    let right_axis = if dual { Some(axis_for(true)) } else { None };

    let years = d.years();
    let (y0, y1) = (years[0] as f64, *years.last().unwrap() as f64);
    let x = |year: i32| {
        let span = (y1 - y0).max(1.0);
        LEFT + (WIDTH - LEFT - RIGHT) * (year as f64 - y0) / span
    };
    let bottom = HEIGHT - BOTTOM;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{LEFT}" y1="{bottom}" x2="{:.2}" y2="{bottom}" stroke="black"/>"#,
        WIDTH - RIGHT
    );
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{bottom}" stroke="black"/>"#
    );

    let label_every = years.len().div_ceil(12).max(1);
    let tick_every = years.len().div_ceil(40).max(1);
    for (i, &year) in years.iter().enumerate() {
        if i % tick_every != 0 {
            continue;
        }
        let xi = x(year);
        let _ = writeln!(
            svg,
            r#"<line class="x-tick" x1="{xi:.2}" y1="{bottom}" x2="{xi:.2}" y2="{:.2}" stroke="black"/>"#,
            bottom + 5.0
        );
        if i % label_every == 0 {
            let _ = writeln!(
                svg,
                r#"<text x="{xi:.2}" y="{:.2}" text-anchor="middle">{year}</text>"#,
                bottom + 18.0
            );
        }
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">Year</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        HEIGHT - 15.0
    );

    let mut y_ticks = |axis: &Axis, at: f64, anchor: &str, dx: f64| {
        let span = axis.hi - axis.lo;
        for i in 0..=5 {
            let v = axis.lo + span * i as f64 / 5.0;
            let yi = axis.y(v);
            let _ = writeln!(
                svg,
                r#"<line class="y-tick" x1="{:.2}" y1="{yi:.2}" x2="{at:.2}" y2="{yi:.2}" stroke="black"/>"#,
                at + dx
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="{anchor}">{}</text>"#,
                at + 2.0 * dx,
                yi + 4.0,
                tick_label(v, span)
            );
        }
    };
    y_ticks(&left_axis, LEFT, "end", -5.0);
    if let Some(axis) = &right_axis {
        y_ticks(axis, WIDTH - RIGHT, "start", 5.0);
    }
    let left_names: Vec<&str> = variables.iter().zip(&right).filter(|(_, &r)| !r).map(|(n, _)| *n).collect();
    let _ = writeln!(
        svg,
        r#"<text transform="translate(20 {:.2}) rotate(-90)" text-anchor="middle">{}</text>"#,
        (TOP + bottom) / 2.0,
        escape(&left_names.join(", "))
    );
    if let Some(_axis) = &right_axis {
        let right_names: Vec<&str> = variables.iter().zip(&right).filter(|(_, &r)| r).map(|(n, _)| *n).collect();
        let _ = writeln!(
            svg,
            r#"<line class="axis" x1="{0:.2}" y1="{TOP}" x2="{0:.2}" y2="{bottom}" stroke="black"/>"#,
            WIDTH - RIGHT
        );
        let _ = writeln!(
            svg,
            r#"<text transform="translate({:.2} {:.2}) rotate(90)" text-anchor="middle">{} (right axis)</text>"#,
            WIDTH - 20.0,
            (TOP + bottom) / 2.0,
            escape(&right_names.join(", "))
        );
    }

    for (i, (s, &on_right)) in series.iter().zip(&right).enumerate() {
        let axis = if on_right { right_axis.as_ref().unwrap() } else { &left_axis };
        let points: Vec<String> = s
            .years()
            .iter()
            .zip(s.values())
            .map(|(&yr, &v)| format!("{:.2},{:.2}", x(yr), axis.y(v)))
            .collect();
        let color = PALETTE[i % PALETTE.len()];
        let dash = if on_right { r#" stroke-dasharray="6 3""# } else { "" };
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2"{dash} points="{}"/>"#,
            points.join(" ")
        );
    }

    // legend along the top edge
    for (i, name) in variables.iter().enumerate() {
        let lx = LEFT + 150.0 * i as f64;
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"<g class="legend"><line x1="{lx:.2}" y1="20" x2="{:.2}" y2="20" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="24">{}{}</text></g>"#,
            lx + 20.0,
            lx + 25.0,
            escape(name),
            if right[i] { " (right)" } else { "" }
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn write_plot(d: &Dataset, variables: &[&str], path: &Path) -> Result<()> {
    let svg = render_plot(d, variables)?;
    std::fs::write(path, svg).map_err(CliError::io(path))
}
