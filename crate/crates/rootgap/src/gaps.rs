//! Monotone rational sequences converging to the minimal and maximal
//! root gap.
//!
//! The engine is the gap polynomial `Delta(y) = prod_{i<j} (y - (p_i - p_j)^2)`,
//! built from coefficients alone through the difference resultant. Its
//! logarithmic derivative turns every pair sum
//! `S(t) = sum_{i<j} 1/((p_i - p_j)^2 - t)` into an exact rational.
//! Seeding below the squared minimal gap (or above the squared maximal
//! gap) and repeatedly adding `1/S` yields a strictly increasing
//! (decreasing) sequence of rationals whose limit is the squared gap
//! itself; every iterate is a rational function of the input
//! coefficients.
//!
//! Repeated gap values are deliberately kept with multiplicity so that
//! the pair sums count every pair, equidistant roots included.

use crate::hankel;
use crate::poly::{Poly, PolyError};
use crate::rat::{pow2, rat, round_down_with_denom, round_up_with_denom, Rat};
use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use std::fmt;

/// Errors from gap-sequence construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapError {
    /// Gap machinery needs at least two distinct roots.
    TooFewRoots,
    /// The requested evaluation point is a squared gap (pole of the sum).
    PoleHit,
    /// The balanced pair sum is undefined at zero offset.
    ZeroEpsilon,
    /// Construction of the gap polynomial failed.
    Poly(PolyError),
    /// An invariant that the convergence argument guarantees was
    /// violated; the caller should treat this as a fault, not bad input.
    Internal(String),
}

impl fmt::Display for GapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapError::TooFewRoots => write!(f, "need at least two distinct roots"),
            GapError::PoleHit => write!(f, "evaluation point coincides with a squared gap"),
            GapError::ZeroEpsilon => write!(f, "offset must be nonzero"),
            GapError::Poly(e) => write!(f, "{e}"),
            GapError::Internal(msg) => write!(f, "internal invariant breach: {msg}"),
        }
    }
}

impl std::error::Error for GapError {}

impl From<PolyError> for GapError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::TooFewRoots => GapError::TooFewRoots,
            other => GapError::Poly(other),
        }
    }
}

/// `Delta(y) = prod_{i<j} (y - (p_i - p_j)^2)`, degree `m(m-1)/2`, with
/// repeated gap values retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapPolynomial {
    pub delta: Poly,
    /// Number of distinct roots of the source polynomial.
    pub m: usize,
}

/// What a sequence is converging to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// Squared minimal gap, from below.
    MinGap,
    /// Squared maximal gap, from above.
    MaxGap,
    /// Squared distance from the root mean to the farthest root, from
    /// above.
    Radius,
    /// Squared distance from a point outside the root range to the
    /// nearest root, from below.
    EndpointMin,
}

impl SequenceKind {
    pub fn is_increasing(self) -> bool {
        matches!(self, SequenceKind::MinGap | SequenceKind::EndpointMin)
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::MinGap => "min-gap",
            SequenceKind::MaxGap => "max-gap",
            SequenceKind::Radius => "radius",
            SequenceKind::EndpointMin => "endpoint",
        }
    }
}

/// Why a sequence stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// Relative increment dropped below tolerance.
    ToleranceReached,
    /// Iteration budget exhausted.
    MaxIterations,
    /// The value is exact: either a two-root closed form or an iterate
    /// landing exactly on the limit.
    ClosedForm,
}

impl StopReason {
    pub fn name(self) -> &'static str {
        match self {
            StopReason::ToleranceReached => "tolerance-reached",
            StopReason::MaxIterations => "max-iterations",
            StopReason::ClosedForm => "closed-form",
        }
    }
}

/// A monotone trail of squared iterates.
#[derive(Debug, Clone)]
pub struct GapSequence {
    pub kind: SequenceKind,
    /// Squared iterates, seed first; strictly monotone in the direction
    /// of `kind`.
    pub iterates: Vec<Rat>,
    pub stop_reason: StopReason,
    /// Distinct-root count of the source polynomial.
    pub m: usize,
}

impl GapSequence {
    pub fn last(&self) -> &Rat {
        self.iterates.last().expect("trail is never empty")
    }

    /// Number of recurrence steps taken (trail length minus the seed).
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }
}

/// Tolerance, iteration budget, and denominator control for the
/// recurrences. The denominator cap bounds iterate bit-length through
/// outward-safe best rational approximation; `None` keeps every iterate
/// exact at the cost of geometric bit growth.
#[derive(Debug, Clone)]
pub struct IterSettings {
    /// Stop once the relative increment falls below this.
    pub tol: Rat,
    pub max_iter: usize,
    pub denom_cap: Option<BigUint>,
}

impl Default for IterSettings {
    fn default() -> Self {
        IterSettings {
            tol: pow2(-40),
            max_iter: 10_000,
            denom_cap: Some(crate::rat::denom_cap(128)),
        }
    }
}

impl IterSettings {
    /// Exact iteration: no denominator rounding.
    pub fn exact(mut self) -> Self {
        self.denom_cap = None;
        self
    }

    pub fn with_tol(mut self, tol: Rat) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }
}

/// Builds the gap polynomial of a monic square-free real-rooted
/// polynomial of degree at least two.
pub fn gap_polynomial(p_min: &Poly) -> Result<GapPolynomial, GapError> {
    let m = match p_min.degree() {
        Some(m) if m >= 2 => m,
        _ => return Err(GapError::TooFewRoots),
    };
    let resultant = p_min.difference_resultant()?;
    let delta = resultant
        .even_substitute()
        .map_err(|_| GapError::Internal("difference resultant has odd terms".into()))?;
    debug_assert_eq!(delta.degree(), Some(m * (m - 1) / 2));
    Ok(GapPolynomial { delta, m })
}

/// `S(t) = sum_{i<j} 1/((p_i - p_j)^2 - t)`, exact, as the negated
/// logarithmic derivative of the gap polynomial.
pub fn pair_sum(gp: &GapPolynomial, t: &Rat) -> Result<Rat, GapError> {
    let value = gp.delta.eval(t);
    if value.is_zero() {
        return Err(GapError::PoleHit);
    }
    Ok(-gp.delta.derivative().eval(t) / value)
}

/// Half the sum of `1/(p_i - p_j - eps)` over all ordered root pairs,
/// expressed through the pair sum: `-m/(2 eps) + eps * S(eps^2)`.
pub fn shifted_pair_sum(gp: &GapPolynomial, eps: &Rat) -> Result<Rat, GapError> {
    if eps.is_zero() {
        return Err(GapError::ZeroEpsilon);
    }
    let s = pair_sum(gp, &(eps * eps))?;
    Ok(rat(-(gp.m as i64)) / (rat(2) * eps) + eps * s)
}

/// Seed below the squared minimal gap: the harmonic mean style inverse
/// of the sum of inverse squared gaps.
pub fn min_gap_seed(gp: &GapPolynomial) -> Result<Rat, GapError> {
    if gp.m < 2 {
        return Err(GapError::TooFewRoots);
    }
    Ok(pair_sum(gp, &Rat::zero())?.recip())
}

/// Seed above the squared maximal gap: the second Hankel determinant of
/// the minimal polynomial, i.e. the sum of all squared pairwise gaps.
pub fn max_gap_seed(p_min: &Poly) -> Result<Rat, GapError> {
    match p_min.degree() {
        Some(m) if m >= 2 => m,
        _ => return Err(GapError::TooFewRoots),
    };
    let sums = hankel::power_sums_from_coeffs(p_min, 3)
        .map_err(|e| GapError::Internal(format!("power sums of minimal polynomial: {e}")))?;
    Ok(sums.get(0) * sums.get(2) - sums.get(1) * sums.get(1))
}

/// Strictly increasing squared iterates converging to the squared
/// minimal gap. Two distinct roots short-circuit to the exact closed
/// form with zero steps.
pub fn min_gap_sequence(gp: &GapPolynomial, settings: &IterSettings) -> Result<GapSequence, GapError> {
    if gp.m < 2 {
        return Err(GapError::TooFewRoots);
    }
    let seed = min_gap_seed(gp)?;
    if gp.m == 2 {
        return Ok(GapSequence {
            kind: SequenceKind::MinGap,
            iterates: vec![seed],
            stop_reason: StopReason::ClosedForm,
            m: gp.m,
        });
    }
    sum_recurrence(&gp.delta, seed, SequenceKind::MinGap, gp.m, settings)
}

/// Strictly decreasing squared iterates converging to the squared
/// maximal gap.
pub fn max_gap_sequence(
    gp: &GapPolynomial,
    p_min: &Poly,
    settings: &IterSettings,
) -> Result<GapSequence, GapError> {
    if gp.m < 2 {
        return Err(GapError::TooFewRoots);
    }
    let seed = max_gap_seed(p_min)?;
    if gp.m == 2 {
        return Ok(GapSequence {
            kind: SequenceKind::MaxGap,
            iterates: vec![seed],
            stop_reason: StopReason::ClosedForm,
            m: gp.m,
        });
    }
    sum_recurrence(&gp.delta, seed, SequenceKind::MaxGap, gp.m, settings)
}

/// The shared recurrence: `next = t + 1/S(t)` with `S` the negated
/// logarithmic derivative of `driver`. Monotonicity and bracket
/// preservation are checked exactly at every step; denominator rounding
/// is always outward-safe (down for increasing trails, up for
/// decreasing) and skipped whenever it would stall progress.
pub(crate) fn sum_recurrence(
    driver: &Poly,
    seed: Rat,
    kind: SequenceKind,
    m: usize,
    settings: &IterSettings,
) -> Result<GapSequence, GapError> {
    let increasing = kind.is_increasing();
    // Denominator-cleared coefficients: positive scaling leaves the
    // logarithmic-derivative ratio untouched, and homogeneous integer
    // evaluation avoids per-coefficient reductions in the hot loop. The
    // derivative is taken after clearing so both share one scale.
    let driver_int = crate::poly::cleared_coefficients(driver);
    let deriv_int: Vec<num_bigint::BigInt> = driver_int
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * num_bigint::BigInt::from(k))
        .collect();
    let mut iterates = vec![seed];
    let mut stop_reason = StopReason::MaxIterations;
    for _ in 0..settings.max_iter {
        let t = iterates.last().unwrap().clone();
        let (a, b) = (t.numer().clone(), t.denom().clone());
        let value = crate::poly::eval_homogeneous(&driver_int, &a, &b);
        if value.is_zero() {
            // Exactly on the limit. Single-term sums (one root, or one
            // distance) legitimately get here; the pair-gap sequences
            // cannot without a bug upstream.
            match kind {
                SequenceKind::Radius | SequenceKind::EndpointMin => {
                    stop_reason = StopReason::ClosedForm;
                    break;
                }
                _ => return Err(GapError::Internal("pair sum pole inside a gap trail".into())),
            }
        }
        let deriv_value = crate::poly::eval_homogeneous(&deriv_int, &a, &b);
        // P(t) = value / b^d and P'(t) = deriv_value / b^{d-1}, so
        // S(t) = -P'(t)/P(t) = -(deriv_value * b) / value.
        let s = Rat::new(-(deriv_value * &b), value);
        if s.is_zero() || s.is_positive() != increasing {
            return Err(GapError::Internal(
                "recurrence sum has the wrong sign for its bracket".into(),
            ));
        }
        let mut next = &t + s.recip();
        if let Some(cap) = &settings.denom_cap {
            let rounded = if increasing {
                round_down_with_denom(&next, cap)
            } else {
                round_up_with_denom(&next, cap)
            };
            let still_progresses = if increasing { rounded > t } else { rounded < t };
            if still_progresses {
                next = rounded;
            }
        }
        let monotone = if increasing { next > t } else { next < t };
        if !monotone {
            return Err(GapError::Internal("recurrence stalled".into()));
        }
        let rel = if t.is_zero() {
            rat(1)
        } else {
            (&next - &t).abs() / t.abs()
        };
        iterates.push(next);
        if rel < settings.tol {
            stop_reason = StopReason::ToleranceReached;
            break;
        }
    }
    Ok(GapSequence {
        kind,
        iterates,
        stop_reason,
        m,
    })
}

/// Diagnostic classification of one min-gap step against the guaranteed
/// growth window for `m >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCheck {
    /// Relative growth of the squared iterate at this step.
    pub growth: Rat,
    /// Growth has dropped below `4/(3m)`: the sequence is in its
    /// guaranteed late regime.
    pub in_regime: bool,
    /// Growth fell below the late-regime floor `4/(3m^2)`; near the
    /// limit this flags that further steps buy little.
    pub below_floor: bool,
}

/// Classifies consecutive squared min-gap iterates; diagnostic only, the
/// floor is guaranteed only once the late regime is entered.
pub fn min_gap_growth_check(m: usize, prev: &Rat, next: &Rat) -> Result<GrowthCheck, GapError> {
    if m < 3 {
        return Err(GapError::TooFewRoots);
    }
    assert!(prev.is_positive() && next > prev, "iterates must grow");
    let growth = next / prev - rat(1);
    let ceiling = rat(4) / rat(3 * m as i64);
    let floor = rat(4) / rat(3 * (m * m) as i64);
    Ok(GrowthCheck {
        in_regime: growth < ceiling,
        below_floor: growth < floor,
        growth,
    })
}

/// The stopping window for the max-gap sequence at precision `delta`:
/// once the observed relative decrease `1 - next/prev` falls inside or
/// below `(2 delta / ((m+1)(m-2)), (1 + 2/((m+1)(m-2))) delta)`, the
/// iterate is within `delta`-grade precision of the limit.
pub fn max_gap_stop_bracket(m: usize, delta: &Rat) -> Result<(Rat, Rat), GapError> {
    if m < 3 {
        return Err(GapError::TooFewRoots);
    }
    assert!(!delta.is_negative(), "precision must be nonnegative");
    let denom = rat(((m + 1) * (m - 2)) as i64);
    let lower = rat(2) * delta / &denom;
    let upper = (rat(1) + rat(2) / denom) * delta;
    Ok((lower, upper))
}
