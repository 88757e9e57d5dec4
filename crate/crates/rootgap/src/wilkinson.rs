//! The equidistant-root worked family.
//!
//! For roots `0, mu, 2mu, ..., (m-1)mu` the min-gap recurrence decouples
//! from the spacing: the squared iterates are `mu^2 w_k^2(m)` where the
//! normalized trail `w_k^2` obeys
//! `w_{k+1}^2 = w_k^2 + (sum_{l=1}^{m-1} (m-l)/(l^2 - w_k^2))^{-1}`
//! and climbs from `w_0^2 = (sum_{l=1}^{m-1} (m-l)/l^2)^{-1}` toward 1.
//!
//! The digamma/trigamma closed form of the seed collapses at integer
//! arguments to the finite harmonic sums used here, so the seed is an
//! exact rational:
//! `psi(m) + gamma = sum_{l<m} 1/l` and
//! `pi^2/6 - psi'(m) = sum_{l<m} 1/l^2`, hence
//! `m pi^2/6 - m psi'(m) - gamma - psi(m) = sum_{l<m} (m-l)/l^2`.
//! The identity is pinned by a unit test on the cleared finite sums.
//!
//! Per-step growth is bracketed by `(4 eps/(7m-4), 1/(m-1))` with
//! `eps = 1 - w_k`, and `eps_k` is majorized by the geometric sequence
//! `eps_0 q^k`, `q = (7m-6)/(7m-4)`, which yields the iteration forecast.
//! `eps` needs a square root, so every check uses one-sided rational
//! bounds in the direction that can only weaken a true claim, never
//! falsify it: lower `eps` bounds inside asserted lower bounds, the
//! upper `eps_0` bound on majorant right-hand sides.

use crate::poly::Poly;
use crate::rat::{pow2, rat, round_down_with_denom, Rat};
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Relative precision for the square-root bounds behind the eps trails.
fn eps_sqrt_prec() -> Rat {
    pow2(-80)
}

/// Errors from the equidistant-family operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WilkinsonError {
    /// Degree must be at least one.
    BadDegree,
    /// The normalized machinery needs at least two (seed) or three
    /// (recurrence) roots.
    TooFewRoots,
    /// `eps` must lie strictly inside (0, 1).
    BadEpsilon,
}

impl fmt::Display for WilkinsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WilkinsonError::BadDegree => write!(f, "degree must be at least 1"),
            WilkinsonError::TooFewRoots => write!(f, "need more distinct roots"),
            WilkinsonError::BadEpsilon => write!(f, "eps must lie strictly in (0, 1)"),
        }
    }
}

impl std::error::Error for WilkinsonError {}

/// Monic polynomial with roots `0, spacing, ..., (m-1) spacing`.
pub fn wilkinson_poly(m: usize, spacing: &Rat) -> Result<Poly, WilkinsonError> {
    if m < 1 {
        return Err(WilkinsonError::BadDegree);
    }
    assert!(spacing.is_positive(), "spacing must be positive");
    let roots: Vec<Rat> = (0..m).map(|l| rat(l as i64) * spacing).collect();
    Ok(Poly::from_roots(&roots, &vec![1; m]).expect("equidistant roots are distinct"))
}

/// The recurrence sum `sum_{l=1}^{m-1} (m-l)/(l^2 - t)`.
fn spacing_sum(m: usize, t: &Rat) -> Rat {
    (1..m)
        .map(|l| rat((m - l) as i64) / (rat((l * l) as i64) - t))
        .sum()
}

/// Normalized squared seed `w_0^2(m) = (sum_{l=1}^{m-1} (m-l)/l^2)^{-1}`,
/// exact.
pub fn normalized_seed(m: usize) -> Result<Rat, WilkinsonError> {
    if m < 2 {
        return Err(WilkinsonError::TooFewRoots);
    }
    Ok(spacing_sum(m, &Rat::zero()).recip())
}

/// Normalized trail of the equidistant family plus certified one-sided
/// bounds on `eps_k = 1 - w_k`.
#[derive(Debug, Clone)]
pub struct WilkinsonTrail {
    pub m: usize,
    /// Root spacing these normalized iterates scale by (squared).
    pub spacing: Rat,
    /// `w_0^2, w_1^2, ...`, strictly increasing below 1.
    pub w_squared: Vec<Rat>,
    /// Certified lower bounds of `eps_k`.
    pub eps_lo: Vec<Rat>,
    /// Certified upper bounds of `eps_k`.
    pub eps_hi: Vec<Rat>,
}

impl WilkinsonTrail {
    /// The min-gap iterates of the spacing-`mu` polynomial:
    /// `mu^2 w_k^2`.
    pub fn scaled_iterates(&self) -> Vec<Rat> {
        let s2 = &self.spacing * &self.spacing;
        self.w_squared.iter().map(|w| &s2 * w).collect()
    }

    /// Steps taken (trail length minus seed).
    pub fn steps(&self) -> usize {
        self.w_squared.len() - 1
    }
}

/// Runs `steps` exact (or denominator-capped) recurrence steps from the
/// normalized seed; rounding is downward, which keeps the trail strictly
/// increasing below one.
pub fn normalized_trail(
    m: usize,
    steps: usize,
    denom_cap: Option<&BigUint>,
) -> Result<WilkinsonTrail, WilkinsonError> {
    normalized_trail_with_spacing(m, steps, denom_cap, Rat::one())
}

/// Same trail tagged with an explicit root spacing for scaled display.
pub fn normalized_trail_with_spacing(
    m: usize,
    steps: usize,
    denom_cap: Option<&BigUint>,
    spacing: Rat,
) -> Result<WilkinsonTrail, WilkinsonError> {
    build_trail(m, steps, denom_cap, spacing, None)
}

/// Runs the recurrence until the certified upper bound of `eps_k` drops
/// below `delta`, or `max_steps` is exhausted. Prefer this over a large
/// fixed step count: once increments shrink under the cap's resolution,
/// further exact steps grow geometrically in bit length.
pub fn normalized_trail_until(
    m: usize,
    delta: &Rat,
    max_steps: usize,
    denom_cap: Option<&BigUint>,
) -> Result<WilkinsonTrail, WilkinsonError> {
    if !delta.is_positive() {
        return Err(WilkinsonError::BadEpsilon);
    }
    build_trail(m, max_steps, denom_cap, Rat::one(), Some(delta))
}

fn build_trail(
    m: usize,
    steps: usize,
    denom_cap: Option<&BigUint>,
    spacing: Rat,
    stop_below: Option<&Rat>,
) -> Result<WilkinsonTrail, WilkinsonError> {
    if m < 3 {
        return Err(WilkinsonError::TooFewRoots);
    }
    assert!(spacing.is_positive());
    let prec = eps_sqrt_prec();
    let eps_bounds = |w2: &Rat| {
        let (lo, hi) = crate::rat::sqrt_bracket(w2, &prec).expect("iterates are positive");
        let e_lo = Rat::one() - hi;
        let e_lo = if e_lo.is_negative() { Rat::zero() } else { e_lo };
        (e_lo, Rat::one() - lo)
    };
    let mut w_squared = vec![normalized_seed(m)?];
    let (lo0, hi0) = eps_bounds(&w_squared[0]);
    let mut eps_lo = vec![lo0];
    let mut eps_hi = vec![hi0];
    for _ in 0..steps {
        if stop_below.is_some_and(|delta| eps_hi.last().unwrap() < delta) {
            break;
        }
        let last = w_squared.last().unwrap();
        let mut next = last + spacing_sum(m, last).recip();
        if let Some(cap) = denom_cap {
            let rounded = round_down_with_denom(&next, cap);
            if rounded > *last {
                next = rounded;
            }
        }
        debug_assert!(*last < next && next < Rat::one());
        let (lo, hi) = eps_bounds(&next);
        w_squared.push(next);
        eps_lo.push(lo);
        eps_hi.push(hi);
    }
    Ok(WilkinsonTrail {
        m,
        spacing,
        w_squared,
        eps_lo,
        eps_hi,
    })
}

/// Guaranteed window for one normalized step at distance `eps` from the
/// limit: `(4 eps / (7m - 4), 1/(m - 1))`.
pub fn step_bounds(m: usize, eps: &Rat) -> Result<(Rat, Rat), WilkinsonError> {
    if m < 3 {
        return Err(WilkinsonError::TooFewRoots);
    }
    if !eps.is_positive() || *eps >= Rat::one() {
        return Err(WilkinsonError::BadEpsilon);
    }
    let lower = rat(4) * eps / rat((7 * m - 4) as i64);
    let upper = Rat::one() / rat((m - 1) as i64);
    Ok((lower, upper))
}

/// Checks every recorded step of a trail against its guaranteed window,
/// using the lower `eps` bound so a true statement cannot be falsified by
/// rounding. Returns the first offending step if any.
pub fn verify_step_bounds(trail: &WilkinsonTrail) -> Result<(), usize> {
    for k in 0..trail.steps() {
        let increment = &trail.w_squared[k + 1] - &trail.w_squared[k];
        let upper = Rat::one() / rat((trail.m - 1) as i64);
        if increment >= upper {
            return Err(k);
        }
        if trail.eps_lo[k].is_positive() {
            let lower = rat(4) * &trail.eps_lo[k] / rat((7 * trail.m - 4) as i64);
            if increment <= lower {
                return Err(k);
            }
        }
    }
    Ok(())
}

/// Geometric majorant ratio `q(m) = (7m - 6)/(7m - 4)`.
pub fn majorant_ratio(m: usize) -> Rat {
    rat((7 * m - 6) as i64) / rat((7 * m - 4) as i64)
}

/// Outcome of the geometric-majorant check in both index conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorantCheck {
    /// `eps_k <= eps_0 q^k` for every recorded `k`.
    pub strong: bool,
    /// `eps_k <= eps_0 q^{k-1}` for every recorded `k >= 1`.
    pub weak: bool,
}

/// Verifies the geometric decay of `eps_k` against `eps_0 q^k`; both the
/// strong and the off-by-one weak form are reported since either index
/// convention is defensible. Conservative rounding: trail lower bounds
/// against the seed upper bound.
pub fn majorant_check(trail: &WilkinsonTrail) -> MajorantCheck {
    let q = majorant_ratio(trail.m);
    let eps0 = &trail.eps_hi[0];
    let mut strong = true;
    let mut weak = true;
    let mut q_pow_prev = Rat::one();
    for k in 1..trail.w_squared.len() {
        let q_pow = &q_pow_prev * &q;
        if trail.eps_lo[k] > eps0 * &q_pow {
            strong = false;
        }
        if trail.eps_lo[k] > eps0 * &q_pow_prev {
            weak = false;
        }
        q_pow_prev = q_pow;
    }
    MajorantCheck { strong, weak }
}

/// Forecast of the step count needed to push `eps_k` below `delta`:
/// `ceil((7m - 4)/2 * (1 - delta/eps_0))`, zero when the seed already
/// qualifies.
///
/// This is the first-order expansion of the geometric majorant, so it
/// reads as an upper bound only while `delta` is comparable to the seed
/// distance `eps_0`; for much smaller `delta` the linearization goes
/// optimistic (it can never exceed `(7m-4)/2` steps). Callers wanting a
/// certified stop should watch the certified `eps` upper bounds of the
/// trail instead.
pub fn forecast_iterations(m: usize, delta: &Rat) -> Result<usize, WilkinsonError> {
    if m < 3 {
        return Err(WilkinsonError::TooFewRoots);
    }
    if !delta.is_positive() {
        return Err(WilkinsonError::BadEpsilon);
    }
    let w0 = normalized_seed(m)?;
    let eps0 = Rat::one()
        - crate::rat::sqrt_lower(&w0, &eps_sqrt_prec()).expect("seed is positive");
    if *delta >= eps0 {
        return Ok(0);
    }
    let k = rat((7 * m - 4) as i64) / rat(2) * (Rat::one() - delta / eps0);
    Ok(k.ceil().to_integer().try_into().expect("desk-scale forecast"))
}

/// First recorded step index whose certified `eps` upper bound drops
/// below `delta`, if any.
pub fn observed_iterations(trail: &WilkinsonTrail, delta: &Rat) -> Option<usize> {
    trail.eps_hi.iter().position(|e| e < delta)
}
