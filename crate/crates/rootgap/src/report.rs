//! Pipeline orchestration and the machine-readable analysis report.
//!
//! Every rational in a report is serialized losslessly as `num/den`;
//! decimal strings ride along for human eyes only. One report gathers
//! the Hankel analysis, the gap trails, and the localization segment for
//! a single input.

use crate::gaps::{self, GapError, GapSequence, IterSettings};
use crate::hankel::{self, HankelError, HankelReport};
use crate::localize;
use crate::matrix::RatMatrix;
use crate::oracle;
use crate::poly::Poly;
use crate::rat::{decimal_str, pow2, rat_str, ratio, Rat};
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use std::time::Instant;

/// Which optional stages to run.
#[derive(Debug, Clone, Copy)]
pub struct Sections {
    pub gaps: bool,
    pub segment: bool,
}

impl Sections {
    pub fn all() -> Self {
        Sections {
            gaps: true,
            segment: true,
        }
    }

    pub fn gaps_only() -> Self {
        Sections {
            gaps: true,
            segment: false,
        }
    }

    pub fn segment_only() -> Self {
        Sections {
            gaps: false,
            segment: true,
        }
    }
}

/// Knobs shared by the pipeline stages.
#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub settings: IterSettings,
    /// Relative precision of the square-root bounds in the segment.
    pub sqrt_prec: Rat,
    /// Extract per-root multiplicities.
    pub multiplicities: bool,
    /// Tolerance for the integer certification of a multiplicity.
    pub mult_tol: Rat,
    pub max_refinements: u32,
    /// Input is the real-symmetric embedding of a complex Hermitian
    /// matrix: every multiplicity is halved in the report.
    pub halve_embedded: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            settings: IterSettings::default(),
            sqrt_prec: pow2(-40),
            multiplicities: false,
            mult_tol: ratio(1, 1_000_000),
            max_refinements: 60,
            halve_embedded: false,
        }
    }
}

/// Pipeline failure, carrying its CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineError {
    /// Malformed or unusable input (exit 1).
    BadInput(String),
    /// The determinant ladder certified a non-real root (exit 2).
    NotRealRooted { k: usize, det: Rat },
    /// An internal invariant was breached (exit 3).
    Internal(String),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::BadInput(_) => 1,
            PipelineError::NotRealRooted { .. } => 2,
            PipelineError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::BadInput(msg) => write!(f, "{msg}"),
            PipelineError::NotRealRooted { k, det } => {
                // This exact message shape is part of the CLI contract.
                if det.is_zero() {
                    write!(
                        f,
                        "not real-rooted: D_{k} = {} vanishes before a later nonzero determinant",
                        rat_str(det)
                    )
                } else {
                    write!(f, "not real-rooted: D_{k} = {} < 0", rat_str(det))
                }
            }
            PipelineError::Internal(msg) => write!(f, "internal invariant breach: {msg}"),
        }
    }
}

impl std::error::Error for PipelineError {}

impl From<HankelError> for PipelineError {
    fn from(e: HankelError) -> Self {
        match e {
            HankelError::NotRealRooted { k, det } => PipelineError::NotRealRooted { k, det },
            HankelError::MinimalPolynomialMismatch => {
                PipelineError::Internal("minimal-polynomial routes disagree".into())
            }
            HankelError::MultiplicityUnresolved => {
                PipelineError::Internal("multiplicity did not certify".into())
            }
            HankelError::SingularHankel | HankelError::InconsistentRank => {
                PipelineError::Internal(format!("{e}"))
            }
            other => PipelineError::BadInput(format!("{other}")),
        }
    }
}

impl From<GapError> for PipelineError {
    fn from(e: GapError) -> Self {
        match e {
            GapError::TooFewRoots => {
                PipelineError::BadInput("need at least two distinct roots".into())
            }
            GapError::Poly(p) => PipelineError::BadInput(format!("{p}")),
            other => PipelineError::Internal(format!("{other}")),
        }
    }
}

/// Echo of what was analyzed.
#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub kind: String,
    pub value: String,
}

/// Lossless rational plus display decimal.
#[derive(Debug, Clone, Serialize)]
pub struct RatValue {
    pub value: String,
    pub decimal: String,
}

pub fn rat_value(x: &Rat) -> RatValue {
    RatValue {
        value: rat_str(x),
        decimal: decimal_str(x),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TrailReport {
    pub kind: String,
    /// Squared iterates, seed first.
    pub iterates: Vec<RatValue>,
    pub iterations: usize,
    pub stop_reason: String,
    /// Rational lower bound of the square root of the final iterate;
    /// display-grade value of the converged quantity.
    pub final_sqrt_lower: RatValue,
}

fn trail_report(seq: &GapSequence, sqrt_prec: &Rat) -> TrailReport {
    let final_sqrt = crate::rat::sqrt_lower(seq.last(), sqrt_prec).unwrap_or_else(|_| Rat::zero());
    TrailReport {
        kind: seq.kind.name().to_string(),
        iterates: seq.iterates.iter().map(rat_value).collect(),
        iterations: seq.steps(),
        stop_reason: seq.stop_reason.name().to_string(),
        final_sqrt_lower: rat_value(&final_sqrt),
    }
}

/// Step diagnostics surfaced alongside the gap trails.
#[derive(Debug, Clone, Serialize)]
pub struct GapDiagnostics {
    /// Whether the final min-gap step's relative growth entered its
    /// guaranteed late window (only meaningful for m >= 3).
    pub min_growth_in_regime: Option<bool>,
    /// Stop window for the max-gap relative decrease at the configured
    /// tolerance.
    pub max_stop_bracket: Option<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityEntry {
    pub enclosure_lo: String,
    pub enclosure_hi: String,
    pub root_decimal: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentReport {
    pub a: RatValue,
    pub b: RatValue,
    pub refined_lo: RatValue,
    pub refined_hi: RatValue,
    pub radius: TrailReport,
    pub alpha: TrailReport,
    pub beta: TrailReport,
}

/// Everything the pipeline produces for one input.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    /// Total root count (degree or matrix size).
    pub n: usize,
    /// Distinct root count.
    pub m: usize,
    /// Determinant ladder `D_1 .. D_n` as lossless rationals.
    pub dets: Vec<String>,
    /// Minimal polynomial coefficients, ascending, lossless.
    pub minimal: Vec<String>,
    pub minimal_display: String,
    /// Elementary symmetric functions of the distinct roots.
    pub sigma: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<MultiplicityEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap: Option<TrailReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_gap: Option<TrailReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap_diagnostics: Option<GapDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segment: Option<SegmentReport>,
    pub timing_ms: u64,
}

/// Full pipeline on a polynomial.
pub fn analyze_polynomial(
    p: &Poly,
    input: InputEcho,
    options: &AnalyzeOptions,
    sections: Sections,
) -> Result<AnalysisReport, PipelineError> {
    let hankel_report = hankel::report_from_polynomial(p)?;
    assemble(hankel_report, input, options, sections)
}

/// Full pipeline on a symmetric rational matrix.
pub fn analyze_hermitian(
    a: &RatMatrix,
    input: InputEcho,
    options: &AnalyzeOptions,
    sections: Sections,
) -> Result<AnalysisReport, PipelineError> {
    let hankel_report = hankel::report_from_hermitian(a)?;
    assemble(hankel_report, input, options, sections)
}

fn assemble(
    hankel_report: HankelReport,
    input: InputEcho,
    options: &AnalyzeOptions,
    sections: Sections,
) -> Result<AnalysisReport, PipelineError> {
    let start = Instant::now();
    let HankelReport {
        sums,
        dets,
        m,
        minimal,
        sigma,
    } = hankel_report;
    let n = sums.n;

    let multiplicities = if options.multiplicities {
        Some(extract_multiplicities(&sums, &minimal, m, n, options)?)
    } else {
        None
    };

    let mut min_gap = None;
    let mut max_gap = None;
    let mut gap_note = None;
    let mut gap_diagnostics = None;
    if sections.gaps {
        if m < 2 {
            gap_note = Some("single distinct root: gap sequences not applicable".to_string());
        } else {
            let gp = gaps::gap_polynomial(&minimal)?;
            let mn = gaps::min_gap_sequence(&gp, &options.settings)?;
            let mx = gaps::max_gap_sequence(&gp, &minimal, &options.settings)?;
            let min_growth_in_regime = if m >= 3 && mn.iterates.len() >= 2 {
                let last = &mn.iterates[mn.iterates.len() - 1];
                let prev = &mn.iterates[mn.iterates.len() - 2];
                Some(gaps::min_gap_growth_check(m, prev, last)?.in_regime)
            } else {
                None
            };
            let max_stop_bracket = if m >= 3 {
                let (lo, hi) = gaps::max_gap_stop_bracket(m, &options.settings.tol)?;
                Some((rat_str(&lo), rat_str(&hi)))
            } else {
                None
            };
            gap_diagnostics = Some(GapDiagnostics {
                min_growth_in_regime,
                max_stop_bracket,
            });
            min_gap = Some(trail_report(&mn, &options.sqrt_prec));
            max_gap = Some(trail_report(&mx, &options.sqrt_prec));
        }
    }

    let segment = if sections.segment {
        let seg = localize::build_segment(&minimal, &options.settings, &options.sqrt_prec)?;
        Some(SegmentReport {
            a: rat_value(&seg.a),
            b: rat_value(&seg.b),
            refined_lo: rat_value(&seg.refined_lo),
            refined_hi: rat_value(&seg.refined_hi),
            radius: trail_report(&seg.radius_trail, &options.sqrt_prec),
            alpha: trail_report(&seg.alpha_trail, &options.sqrt_prec),
            beta: trail_report(&seg.beta_trail, &options.sqrt_prec),
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        input,
        n,
        m,
        dets: dets.iter().map(rat_str).collect(),
        minimal: minimal.coeffs().iter().map(rat_str).collect(),
        minimal_display: minimal.to_string(),
        sigma: sigma.iter().map(rat_str).collect(),
        multiplicities,
        min_gap,
        max_gap,
        gap_note,
        gap_diagnostics,
        segment,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn extract_multiplicities(
    sums: &hankel::PowerSums,
    minimal: &Poly,
    m: usize,
    n: usize,
    options: &AnalyzeOptions,
) -> Result<Vec<MultiplicityEntry>, PipelineError> {
    let h_m = hankel::hankel_matrix(sums, m);
    let enclosures = oracle::isolate_real_roots(minimal, &ratio(1, 1024));
    if enclosures.len() != m {
        return Err(PipelineError::Internal(format!(
            "isolated {} roots of a degree-{m} minimal polynomial",
            enclosures.len()
        )));
    }
    let mut out = Vec::with_capacity(m);
    let mut total = 0usize;
    for enclosure in &enclosures {
        let mut mult = hankel::multiplicity(
            minimal,
            &h_m,
            enclosure,
            &options.mult_tol,
            options.max_refinements,
        )?;
        if options.halve_embedded {
            if mult % 2 != 0 {
                return Err(PipelineError::Internal(
                    "embedding mode requires even multiplicities".into(),
                ));
            }
            mult /= 2;
        }
        total += mult;
        out.push(MultiplicityEntry {
            enclosure_lo: rat_str(&enclosure.lo),
            enclosure_hi: rat_str(&enclosure.hi),
            root_decimal: decimal_str(&enclosure.midpoint()),
            multiplicity: mult,
        });
    }
    let expected = if options.halve_embedded { n / 2 } else { n };
    if total != expected {
        return Err(PipelineError::Internal(format!(
            "multiplicities sum to {total}, expected {expected}"
        )));
    }
    Ok(out)
}

/// Compact display of one value: exact when short, decimal otherwise.
/// JSON output carries the lossless form; text is for reading.
fn show(v: &RatValue) -> String {
    if v.value.len() <= 24 {
        format!("{} (~{})", v.value, v.decimal)
    } else {
        format!("~{}", v.decimal)
    }
}

/// Human-readable rendering of a report.
pub fn render_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    use std::fmt::Write;
    let _ = writeln!(out, "input ({}): {}", report.input.kind, report.input.value);
    let _ = writeln!(out, "n = {}, distinct roots m = {}", report.n, report.m);
    let dets: Vec<String> = report
        .dets
        .iter()
        .enumerate()
        .map(|(i, d)| format!("D_{} = {}", i + 1, d))
        .collect();
    let _ = writeln!(out, "determinant ladder: {}", dets.join(", "));
    let _ = writeln!(out, "minimal polynomial: {}", report.minimal_display);
    let _ = writeln!(out, "sigma: {}", report.sigma.join(", "));
    if let Some(mults) = &report.multiplicities {
        let shown: Vec<String> = mults
            .iter()
            .map(|e| format!("root ~ {} -> {}", e.root_decimal, e.multiplicity))
            .collect();
        let _ = writeln!(out, "multiplicities: {}", shown.join(", "));
    }
    if let Some(note) = &report.gap_note {
        let _ = writeln!(out, "gaps: {note}");
    }
    for (label, trail) in [("min gap", &report.min_gap), ("max gap", &report.max_gap)] {
        if let Some(t) = trail {
            let first = t.iterates.first().map(show).unwrap_or_else(|| "-".into());
            let last = t.iterates.last().map(show).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "{label} (squared): {first} -> {last} in {} steps ({}); {label} >= {}",
                t.iterations,
                t.stop_reason,
                show(&t.final_sqrt_lower),
            );
        }
    }
    if let Some(seg) = &report.segment {
        let _ = writeln!(out, "segment: a = {}, b = {}", show(&seg.a), show(&seg.b));
        let _ = writeln!(
            out,
            "refined: [{}, {}] after {}/{}/{} radius/alpha/beta steps",
            show(&seg.refined_lo),
            show(&seg.refined_hi),
            seg.radius.iterations,
            seg.alpha.iterations,
            seg.beta.iterations,
        );
    }
    let _ = writeln!(out, "time: {} ms", report.timing_ms);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{parse_rat, rat};

    fn echo() -> InputEcho {
        InputEcho {
            kind: "coeffs".into(),
            value: "test".into(),
        }
    }

    #[test]
    fn full_report_for_three_roots() {
        let p = Poly::from_ints(&[0, 3, -4, 1]);
        let mut opts = AnalyzeOptions::default();
        opts.multiplicities = true;
        let report = analyze_polynomial(&p, echo(), &opts, Sections::all()).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.m, 3);
        assert_eq!(report.dets, vec!["3/1", "14/1", "36/1"]);
        assert_eq!(report.minimal_display, "x^3 - 4x^2 + 3x");
        let min_gap = report.min_gap.as_ref().unwrap();
        assert_eq!(min_gap.iterates[0].value, "36/49");
        let max_gap = report.max_gap.as_ref().unwrap();
        assert_eq!(max_gap.iterates[0].value, "14/1");
        assert_eq!(max_gap.iterates[1].value, "556/49");
        let mults = report.multiplicities.as_ref().unwrap();
        assert_eq!(
            mults.iter().map(|e| e.multiplicity).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
        let seg = report.segment.as_ref().unwrap();
        let lo = parse_rat(&seg.refined_lo.value).unwrap();
        let hi = parse_rat(&seg.refined_hi.value).unwrap();
        assert!(lo <= rat(0) && rat(3) <= hi);
        // Lossless round-trip of serialized rationals.
        for d in &report.dets {
            assert_eq!(rat_str(&parse_rat(d).unwrap()), *d);
        }
    }

    #[test]
    fn multiplicities_on_repeated_roots() {
        let p = Poly::from_ints(&[-2, 5, -4, 1]);
        let mut opts = AnalyzeOptions::default();
        opts.multiplicities = true;
        let report =
            analyze_polynomial(&p, echo(), &opts, Sections::gaps_only()).unwrap();
        assert_eq!(report.m, 2);
        assert_eq!(report.minimal_display, "x^2 - 3x + 2");
        let mults = report.multiplicities.as_ref().unwrap();
        assert_eq!(
            mults.iter().map(|e| e.multiplicity).collect::<Vec<_>>(),
            vec![2, 1]
        );
        // m = 2: exact closed form with zero iterations.
        let min_gap = report.min_gap.as_ref().unwrap();
        assert_eq!(min_gap.iterations, 0);
        assert_eq!(min_gap.stop_reason, "closed-form");
        assert_eq!(min_gap.iterates[0].value, "1/1");
    }

    #[test]
    fn complex_roots_exit_with_ladder_message() {
        let p = Poly::from_ints(&[1, 0, 1]);
        let err = analyze_polynomial(&p, echo(), &AnalyzeOptions::default(), Sections::all())
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert_eq!(format!("{err}"), "not real-rooted: D_2 = -4/1 < 0");
    }

    #[test]
    fn single_root_skips_gaps() {
        let p = Poly::from_ints(&[-5, 1]);
        let report =
            analyze_polynomial(&p, echo(), &AnalyzeOptions::default(), Sections::all()).unwrap();
        assert!(report.min_gap.is_none());
        assert!(report.gap_note.is_some());
        let seg = report.segment.as_ref().unwrap();
        assert_eq!(seg.a.value, "5/1");
        assert_eq!(seg.b.value, "5/1");
    }

    #[test]
    fn hermitian_matrix_route() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(2)],
        ])
        .unwrap();
        let mut opts = AnalyzeOptions::default();
        opts.multiplicities = true;
        let report = analyze_hermitian(&a, echo(), &opts, Sections::all()).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.m, 2);
        assert_eq!(report.minimal_display, "x^2 - 3x + 2");
        let mults = report.multiplicities.as_ref().unwrap();
        assert_eq!(
            mults.iter().map(|e| e.multiplicity).collect::<Vec<_>>(),
            vec![2, 1]
        );
    }

    #[test]
    fn embedded_matrix_halves_multiplicities() {
        // Real-symmetric embedding of the 1x1 complex Hermitian [3]:
        // diag(3, 3); the lone eigenvalue reports multiplicity 1.
        let a = RatMatrix::from_rows(vec![vec![rat(3), rat(0)], vec![rat(0), rat(3)]]).unwrap();
        let mut opts = AnalyzeOptions::default();
        opts.multiplicities = true;
        opts.halve_embedded = true;
        let report = analyze_hermitian(&a, echo(), &opts, Sections::segment_only()).unwrap();
        let mults = report.multiplicities.as_ref().unwrap();
        assert_eq!(mults.len(), 1);
        assert_eq!(mults[0].multiplicity, 1);
    }

    #[test]
    fn json_has_documented_fields() {
        let p = Poly::from_ints(&[0, 3, -4, 1]);
        let report =
            analyze_polynomial(&p, echo(), &AnalyzeOptions::default(), Sections::all()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        for field in ["input", "n", "m", "dets", "minimal", "sigma", "min_gap", "max_gap", "segment", "timing_ms"] {
            assert!(json.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(json["min_gap"]["iterates"][0]["value"], "36/49");
    }
}
