//! Command-line front end.
//!
//! Subcommands: `analyze` (full pipeline), `gaps` and `localize`
//! (single-stage runs), `wilkinson` (the equidistant family). Exit codes
//! are a stable contract: 0 success, 1 usage or malformed input, 2 input
//! certified not real-rooted, 3 internal invariant breach.
//!
//! Coefficients are ASCENDING degree, comma-separated, each entry an
//! integer, a `num/den` rational, or decimal/scientific notation (kept
//! exact). A positional file runs batch mode: one coefficient list per
//! line in, one JSON object per line out, order preserved.

use crate::matrix::RatMatrix;
use crate::poly::Poly;
use crate::rat::{denom_cap, parse_rat, Rat};
use crate::report::{
    analyze_hermitian, analyze_polynomial, render_text, AnalysisReport, AnalyzeOptions, InputEcho,
    PipelineError, Sections,
};
use crate::wilkinson;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_traits::{One, Signed};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "rootgap",
    version,
    about = "Exact root counts, minimal polynomials, root-gap bounds and localization segments for real-rooted polynomials and symmetric rational matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: determinant ladder, minimal polynomial, gap trails,
    /// localization segment.
    Analyze(AnalyzeArgs),
    /// Determinant ladder, minimal polynomial and gap trails only.
    Gaps(AnalyzeArgs),
    /// Determinant ladder, minimal polynomial and localization segment
    /// only.
    Localize(AnalyzeArgs),
    /// Normalized trail, per-step bounds and iteration forecast for the
    /// equidistant-root family.
    Wilkinson(WilkinsonArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Ascending coefficients, e.g. "0,3,-4,1" for x^3 - 4x^2 + 3x.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    coeffs: Option<String>,

    /// Roots with repetition, e.g. "1,1,2" (testing convenience).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    roots: Option<String>,

    /// Symmetric matrix file: first line n, then n rows of n rationals.
    #[arg(long, value_name = "PATH")]
    matrix_file: Option<PathBuf>,

    /// Batch file: one coefficient list per line, one JSON object per
    /// line out.
    #[arg(value_name = "FILE")]
    input: Option<PathBuf>,

    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Certify per-root multiplicities.
    #[arg(long)]
    multiplicities: bool,

    /// Matrix input is the real-symmetric embedding of a complex
    /// Hermitian matrix; reported multiplicities are halved.
    #[arg(long)]
    complex_embedding: bool,

    /// Relative increment threshold that stops the iterations.
    #[arg(long, value_name = "RAT")]
    tol: Option<String>,

    /// Iteration budget per sequence.
    #[arg(long, value_name = "N")]
    max_iter: Option<usize>,

    /// Relative precision of rational square-root bounds.
    #[arg(long, value_name = "RAT")]
    sqrt_prec: Option<String>,

    /// Denominator cap in bits for iterate rounding; 0 disables rounding.
    #[arg(long, value_name = "BITS")]
    denom_cap: Option<u32>,

    /// Tolerance for integer certification of multiplicities.
    #[arg(long, value_name = "RAT")]
    mult_tol: Option<String>,
}

#[derive(Args)]
struct WilkinsonArgs {
    /// Number of equidistant roots (at least 3).
    #[arg(short, long)]
    m: usize,

    /// Root spacing (positive rational).
    #[arg(long, value_name = "RAT", default_value = "1")]
    mu: String,

    /// Recurrence steps to record.
    #[arg(long, value_name = "N")]
    steps: Option<usize>,

    /// Precision target: also reports forecast vs observed step count.
    #[arg(long, value_name = "RAT")]
    delta: Option<String>,

    #[arg(long)]
    json: bool,
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Analyze(args) => run_analysis(&args, Sections::all()),
        Command::Gaps(args) => run_analysis(&args, Sections::gaps_only()),
        Command::Localize(args) => run_analysis(&args, Sections::segment_only()),
        Command::Wilkinson(args) => run_wilkinson(&args),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn parse_rat_arg(name: &str, value: &str) -> Result<Rat, String> {
    parse_rat(value).map_err(|e| format!("--{name}: {e}"))
}

fn build_options(args: &AnalyzeArgs) -> Result<AnalyzeOptions, String> {
    let mut options = AnalyzeOptions::default();
    if let Some(tol) = &args.tol {
        let tol = parse_rat_arg("tol", tol)?;
        if !tol.is_positive() {
            return Err("--tol must be positive".into());
        }
        options.settings.tol = tol;
    }
    if let Some(max_iter) = args.max_iter {
        options.settings.max_iter = max_iter;
    }
    if let Some(bits) = args.denom_cap {
        options.settings.denom_cap = if bits == 0 { None } else { Some(denom_cap(bits)) };
    }
    if let Some(prec) = &args.sqrt_prec {
        let prec = parse_rat_arg("sqrt-prec", prec)?;
        if !prec.is_positive() {
            return Err("--sqrt-prec must be positive".into());
        }
        options.sqrt_prec = prec;
    }
    if let Some(tol) = &args.mult_tol {
        let tol = parse_rat_arg("mult-tol", tol)?;
        if !tol.is_positive() {
            return Err("--mult-tol must be positive".into());
        }
        options.mult_tol = tol;
    }
    options.multiplicities = args.multiplicities;
    options.halve_embedded = args.complex_embedding;
    Ok(options)
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',')
        .map(|entry| parse_rat(entry).map_err(|e| format!("{e}")))
        .collect()
}

fn poly_from_coeff_list(s: &str) -> Result<Poly, String> {
    let coeffs = parse_rat_list(s)?;
    let p = Poly::from_coeffs(coeffs);
    if p.is_zero() {
        return Err("coefficients describe the zero polynomial".into());
    }
    if p.degree() == Some(0) {
        return Err("constant polynomial has no roots".into());
    }
    Ok(p)
}

fn poly_from_root_list(s: &str) -> Result<Poly, String> {
    let listed = parse_rat_list(s)?;
    if listed.is_empty() {
        return Err("empty root list".into());
    }
    // Repeats express multiplicity.
    let mut roots: Vec<Rat> = Vec::new();
    let mut mults: Vec<usize> = Vec::new();
    for r in listed {
        match roots.iter().position(|known| *known == r) {
            Some(i) => mults[i] += 1,
            None => {
                roots.push(r);
                mults.push(1);
            }
        }
    }
    Poly::from_roots(&roots, &mults).map_err(|e| format!("{e}"))
}

fn matrix_from_file(path: &Path) -> Result<RatMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or("matrix file is empty")?
        .trim()
        .parse()
        .map_err(|_| "matrix file must start with the dimension".to_string())?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.next().ok_or("matrix file ended early")?;
        let row: Result<Vec<Rat>, String> = line
            .split_whitespace()
            .map(|e| parse_rat(e).map_err(|err| format!("{err}")))
            .collect();
        let row = row?;
        if row.len() != n {
            return Err(format!("expected {n} entries per row, found {}", row.len()));
        }
        rows.push(row);
    }
    let m = RatMatrix::from_rows(rows).map_err(|e| format!("{e}"))?;
    if !m.is_symmetric() {
        return Err("matrix is not symmetric".into());
    }
    Ok(m)
}

/// Error payload for JSON consumers.
#[derive(Serialize)]
struct ErrorLine<'a> {
    input: &'a InputEcho,
    error: String,
}

fn emit_report(report: &AnalysisReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    } else {
        print!("{}", render_text(report));
    }
}

fn run_analysis(args: &AnalyzeArgs, sections: Sections) -> i32 {
    let options = match build_options(args) {
        Ok(o) => o,
        Err(msg) => return usage_error(&msg),
    };
    let sources = [
        args.coeffs.is_some(),
        args.roots.is_some(),
        args.matrix_file.is_some(),
        args.input.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return usage_error(
            "exactly one input source required: --coeffs, --roots, --matrix-file, or a batch file",
        );
    }
    if let Some(coeffs) = &args.coeffs {
        let p = match poly_from_coeff_list(coeffs) {
            Ok(p) => p,
            Err(msg) => return usage_error(&msg),
        };
        let echo = InputEcho {
            kind: "coeffs".into(),
            value: coeffs.clone(),
        };
        return finish_single(analyze_polynomial(&p, echo, &options, sections), args.json);
    }
    if let Some(roots) = &args.roots {
        let p = match poly_from_root_list(roots) {
            Ok(p) => p,
            Err(msg) => return usage_error(&msg),
        };
        let echo = InputEcho {
            kind: "roots".into(),
            value: roots.clone(),
        };
        return finish_single(analyze_polynomial(&p, echo, &options, sections), args.json);
    }
    if let Some(path) = &args.matrix_file {
        let m = match matrix_from_file(path) {
            Ok(m) => m,
            Err(msg) => return usage_error(&msg),
        };
        let echo = InputEcho {
            kind: "matrix-file".into(),
            value: path.display().to_string(),
        };
        return finish_single(analyze_hermitian(&m, echo, &options, sections), args.json);
    }
    let path = args.input.as_ref().expect("batch source checked above");
    run_batch(path, &options, sections)
}

fn finish_single(result: Result<AnalysisReport, PipelineError>, json: bool) -> i32 {
    match result {
        Ok(report) => {
            emit_report(&report, json);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Batch mode: every nonempty line is analyzed independently and emits
/// one JSON object, in input order. Lines the ladder rejects produce an
/// error object instead of aborting the stream.
fn run_batch(path: &Path, options: &AnalyzeOptions, sections: Sections) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
    };
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let echo = InputEcho {
            kind: "batch-line".into(),
            value: line.to_string(),
        };
        let p = match poly_from_coeff_list(line) {
            Ok(p) => p,
            Err(msg) => return usage_error(&format!("line {}: {msg}", idx + 1)),
        };
        match analyze_polynomial(&p, echo, options, sections) {
            Ok(report) => {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            }
            Err(e @ PipelineError::NotRealRooted { .. }) => {
                let payload = ErrorLine {
                    input: &InputEcho {
                        kind: "batch-line".into(),
                        value: line.to_string(),
                    },
                    error: format!("{e}"),
                };
                println!("{}", serde_json::to_string(&payload).expect("error serializes"));
            }
            Err(e) => {
                eprintln!("error: line {}: {e}", idx + 1);
                return e.exit_code();
            }
        }
    }
    0
}

#[derive(Serialize)]
struct WilkinsonReport {
    m: usize,
    mu: String,
    w_squared: Vec<crate::report::RatValue>,
    scaled_iterates: Vec<String>,
    eps_lower: Vec<String>,
    eps_upper: Vec<String>,
    step_bounds_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    forecast: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    observed: Option<usize>,
}

fn run_wilkinson(args: &WilkinsonArgs) -> i32 {
    if args.m < 3 {
        return usage_error("wilkinson requires m >= 3");
    }
    let mu = match parse_rat_arg("mu", &args.mu) {
        Ok(v) if v.is_positive() => v,
        Ok(_) => return usage_error("--mu must be positive"),
        Err(msg) => return usage_error(&msg),
    };
    let delta = match &args.delta {
        None => None,
        Some(d) => match parse_rat_arg("delta", d) {
            Ok(v) if v.is_positive() && v < Rat::one() => Some(v),
            Ok(_) => return usage_error("--delta must lie strictly in (0, 1)"),
            Err(msg) => return usage_error(&msg),
        },
    };
    let cap = denom_cap(128);
    // With a delta target and no explicit step count, run to the
    // certified crossing.
    let trail = match (args.steps, &delta) {
        (None, Some(d)) => wilkinson::normalized_trail_until(args.m, d, 10_000, Some(&cap))
            .map(|mut t| {
                t.spacing = mu.clone();
                t
            }),
        (steps, _) => wilkinson::normalized_trail_with_spacing(
            args.m,
            steps.unwrap_or(10),
            Some(&cap),
            mu.clone(),
        ),
    };
    let trail = match trail {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("{e}")),
    };
    let forecast = delta
        .as_ref()
        .map(|d| wilkinson::forecast_iterations(args.m, d).expect("validated above"));
    let observed = delta
        .as_ref()
        .and_then(|d| wilkinson::observed_iterations(&trail, d));
    let report = WilkinsonReport {
        m: args.m,
        mu: crate::rat::rat_str(&mu),
        w_squared: trail.w_squared.iter().map(crate::report::rat_value).collect(),
        scaled_iterates: trail
            .scaled_iterates()
            .iter()
            .map(crate::rat::rat_str)
            .collect(),
        eps_lower: trail.eps_lo.iter().map(crate::rat::rat_str).collect(),
        eps_upper: trail.eps_hi.iter().map(crate::rat::rat_str).collect(),
        step_bounds_hold: wilkinson::verify_step_bounds(&trail).is_ok(),
        forecast,
        observed,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!("equidistant family: m = {}, spacing = {}", report.m, report.mu);
        let shown: Vec<String> = report
            .w_squared
            .iter()
            .map(|w| format!("{} (~{})", w.value, w.decimal))
            .collect();
        println!("normalized squared trail: {}", shown.join(", "));
        println!(
            "per-step window check: {}",
            if report.step_bounds_hold { "PASS" } else { "FAIL" }
        );
        if let (Some(f), Some(d)) = (report.forecast, &delta) {
            let observed = report
                .observed
                .map(|k| k.to_string())
                .unwrap_or_else(|| "not reached".into());
            println!(
                "forecast steps to eps < {}: {f}, observed: {observed}",
                crate::rat::rat_str(d)
            );
        }
    }
    if report.step_bounds_hold {
        0
    } else {
        3
    }
}
