//! A certified segment of the number axis containing all roots.
//!
//! The radius sequence decreases toward the squared distance from the
//! root mean to the farthest root; its rational upper square root spans
//! the outer segment `[a, b]`. Two increasing endpoint sequences then
//! converge to the squared distance from each endpoint to the nearest
//! root, tightening the segment from both sides.
//!
//! Square roots are irrational in general, so every conversion from a
//! squared iterate to a length is rounded one-sidedly: outward for the
//! outer endpoints, inward for the refinements. All enclosure claims
//! survive this rounding by construction.

use crate::gaps::{max_gap_seed, sum_recurrence, GapError, GapSequence, IterSettings, SequenceKind, StopReason};
use crate::poly::Poly;
use crate::rat::{rat, NegativeRadicand, Rat};
use num_traits::{Signed, Zero};

/// A certified enclosing segment with its iteration trails.
#[derive(Debug, Clone)]
pub struct Segment {
    /// Outer lower endpoint: root mean minus the radius upper bound.
    pub a: Rat,
    /// Outer upper endpoint.
    pub b: Rat,
    /// Decreasing squared-radius trail.
    pub radius_trail: GapSequence,
    /// Increasing squared-distance trail from `a`.
    pub alpha_trail: GapSequence,
    /// Increasing squared-distance trail from `b`.
    pub beta_trail: GapSequence,
    /// Refined lower bound: `a` plus an inward square root of the final
    /// alpha iterate; never exceeds the smallest root.
    pub refined_lo: Rat,
    /// Refined upper bound, symmetric from `b`.
    pub refined_hi: Rat,
}

/// Arithmetic mean of the roots of a monic polynomial.
pub fn mean_root(p_min: &Poly) -> Rat {
    let m = p_min.degree().expect("mean of the zero polynomial");
    assert!(m >= 1, "mean of a constant");
    debug_assert!(p_min.is_monic());
    -p_min.coeff(m - 1) / rat(m as i64)
}

/// `Theta(y) = prod_i (y - (p_i - mean)^2)`: shift to the mean, split
/// into even and odd parts `C(x) = E(x^2) + x O(x^2)`, and assemble
/// `(-1)^m (E(y)^2 - y O(y)^2)`, monic.
pub fn centered_squares(p_min: &Poly) -> Poly {
    offset_squares(p_min, &mean_root(p_min))
}

/// `prod_i (y - (p_i - c)^2)` for an arbitrary shift `c`, same even/odd
/// construction.
pub fn offset_squares(p_min: &Poly, c: &Rat) -> Poly {
    let m = p_min.degree().expect("offset squares of the zero polynomial");
    assert!(m >= 1);
    let shifted = p_min.taylor_shift(c);
    let even = Poly::from_coeffs(shifted.coeffs().iter().step_by(2).cloned().collect());
    let odd = Poly::from_coeffs(shifted.coeffs().iter().skip(1).step_by(2).cloned().collect());
    let even_sq = &even * &even;
    let odd_sq = &(&Poly::x() * &odd) * &odd;
    let diff = &even_sq - &odd_sq;
    let result = if m.is_multiple_of(2) { diff } else { -&diff };
    debug_assert!(result.is_monic() && result.degree() == Some(m));
    result
}

/// Rational upper bound of `sqrt(x)` with certified relative precision;
/// exact squares come back exact.
pub fn rational_sqrt_upper(x: &Rat, rel_prec: &Rat) -> Result<Rat, NegativeRadicand> {
    crate::rat::sqrt_upper(x, rel_prec)
}

/// Rational lower bound of `sqrt(x)`, same contract from below.
pub fn rational_sqrt_lower(x: &Rat, rel_prec: &Rat) -> Result<Rat, NegativeRadicand> {
    crate::rat::sqrt_lower(x, rel_prec)
}

/// Decreasing squared-radius sequence driven by the centered-squares
/// polynomial; the seed must dominate every centered square, which any
/// max-gap iterate does.
pub fn radius_sequence(
    theta: &Poly,
    seed: Rat,
    settings: &IterSettings,
) -> Result<GapSequence, GapError> {
    let m = theta.degree().expect("radius of the zero polynomial");
    sum_recurrence(theta, seed, SequenceKind::Radius, m, settings)
}

/// Increasing sequence converging to the smallest root of `squares`
/// (all roots positive): seeded by the inverse sum of inverse roots.
pub fn endpoint_sequence(squares: &Poly, settings: &IterSettings) -> Result<GapSequence, GapError> {
    let m = squares.degree().expect("endpoint squares of the zero polynomial");
    let at_zero = squares.eval(&Rat::zero());
    if at_zero.is_zero() {
        return Err(GapError::Internal(
            "endpoint coincides with a root; the offset polynomial vanishes at zero".into(),
        ));
    }
    let sum0 = -squares.derivative().eval(&Rat::zero()) / at_zero;
    if !sum0.is_positive() {
        return Err(GapError::Internal(
            "endpoint squares polynomial has nonpositive inverse-root sum".into(),
        ));
    }
    sum_recurrence(squares, sum0.recip(), SequenceKind::EndpointMin, m, settings)
}

/// Runs the full localization: radius trail, outer segment, endpoint
/// trails, refined segment. A single root degenerates to the exact
/// point.
pub fn build_segment(
    p_min: &Poly,
    settings: &IterSettings,
    sqrt_prec: &Rat,
) -> Result<Segment, GapError> {
    let m = match p_min.degree() {
        Some(m) if m >= 1 => m,
        _ => return Err(GapError::TooFewRoots),
    };
    let mean = mean_root(p_min);
    let theta = centered_squares(p_min);
    // Any max-gap iterate dominates the largest centered square; its
    // seed is the cheapest. One root has radius zero, any positive seed
    // works.
    let seed = if m >= 2 { max_gap_seed(p_min)? } else { rat(1) };
    let radius_trail = radius_sequence(&theta, seed, settings)?;
    let radius_upper = rational_sqrt_upper(radius_trail.last(), sqrt_prec)
        .map_err(|_| GapError::Internal("negative squared radius".into()))?;
    let a = &mean - &radius_upper;
    let b = &mean + &radius_upper;
    if m == 1 {
        // The mean is the root; the segment is already a point.
        let trail = |kind| GapSequence {
            kind,
            iterates: vec![Rat::zero()],
            stop_reason: StopReason::ClosedForm,
            m,
        };
        return Ok(Segment {
            refined_lo: a.clone(),
            refined_hi: b.clone(),
            a,
            b,
            radius_trail,
            alpha_trail: trail(SequenceKind::EndpointMin),
            beta_trail: trail(SequenceKind::EndpointMin),
        });
    }
    let alpha_trail = endpoint_sequence(&offset_squares(p_min, &a), settings)?;
    let beta_trail = endpoint_sequence(&offset_squares(p_min, &b), settings)?;
    let alpha_lower = rational_sqrt_lower(alpha_trail.last(), sqrt_prec)
        .map_err(|_| GapError::Internal("negative squared endpoint distance".into()))?;
    let beta_lower = rational_sqrt_lower(beta_trail.last(), sqrt_prec)
        .map_err(|_| GapError::Internal("negative squared endpoint distance".into()))?;
    Ok(Segment {
        refined_lo: &a + &alpha_lower,
        refined_hi: &b - &beta_lower,
        a,
        b,
        radius_trail,
        alpha_trail,
        beta_trail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{pow2, ratio};

    fn settings() -> IterSettings {
        IterSettings::default()
    }

    #[test]
    fn centered_squares_examples() {
        // x^2 - 1: mean 0, both centered squares equal 1.
        let p = Poly::from_ints(&[-1, 0, 1]);
        let theta = centered_squares(&p);
        let expected = {
            let lin = Poly::from_ints(&[-1, 1]);
            &lin * &lin
        };
        assert_eq!(theta, expected);

        // x^3 - 4x^2 + 3x: mean 4/3, squares 16/9, 1/9, 25/9.
        let q = Poly::from_ints(&[0, 3, -4, 1]);
        let theta_q = centered_squares(&q);
        let oracle = Poly::from_roots(
            &[ratio(16, 9), ratio(1, 9), ratio(25, 9)],
            &[1, 1, 1],
        )
        .unwrap();
        assert_eq!(theta_q, oracle);

        // Single root at zero.
        assert_eq!(centered_squares(&Poly::x()), Poly::x());
    }

    #[test]
    fn offset_squares_examples() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(
            offset_squares(&p, &rat(-2)),
            Poly::from_roots(&[rat(1), rat(9)], &[1, 1]).unwrap()
        );
        assert_eq!(
            offset_squares(&p, &rat(0)),
            Poly::from_roots(&[rat(1)], &[2]).unwrap()
        );
        let q = Poly::from_ints(&[0, 3, -4, 1]);
        assert_eq!(
            offset_squares(&q, &rat(-1)),
            Poly::from_roots(&[rat(1), rat(4), rat(16)], &[1, 1, 1]).unwrap()
        );
    }

    #[test]
    fn radius_first_step_frozen() {
        // Theta = (y-1)^2, seed 4: one step lands on 5/2.
        let theta = Poly::from_roots(&[rat(1)], &[2]).unwrap();
        let s = IterSettings::default().exact().with_max_iter(1);
        let seq = radius_sequence(&theta, rat(4), &s).unwrap();
        assert_eq!(seq.iterates, vec![rat(4), ratio(5, 2)]);

        // x^3 - 4x^2 + 3x with seed 14.
        let theta_q = centered_squares(&Poly::from_ints(&[0, 3, -4, 1]));
        let seq_q = radius_sequence(&theta_q, rat(14), &s).unwrap();
        assert_eq!(seq_q.iterates[1], ratio(666_872, 67_473));
    }

    #[test]
    fn radius_single_root_hits_zero_exactly() {
        let seq = radius_sequence(&Poly::x(), rat(1), &settings()).unwrap();
        assert_eq!(seq.iterates, vec![rat(1), rat(0)]);
        assert_eq!(seq.stop_reason, StopReason::ClosedForm);
    }

    #[test]
    fn radius_converges_to_largest_centered_square() {
        let theta = centered_squares(&Poly::from_ints(&[0, 3, -4, 1]));
        let seq = radius_sequence(&theta, rat(14), &settings()).unwrap();
        let limit = ratio(25, 9);
        for w in seq.iterates.windows(2) {
            assert!(w[1] < w[0]);
        }
        for it in &seq.iterates {
            assert!(*it > limit);
        }
        assert!(seq.last() - &limit < ratio(1, 1_000_000));
    }

    #[test]
    fn endpoint_sequence_examples() {
        // (y-1)(y-9): seed 9/10, first step 819/820.
        let sq = Poly::from_roots(&[rat(1), rat(9)], &[1, 1]).unwrap();
        let s1 = IterSettings::default().exact().with_max_iter(1);
        let seq = endpoint_sequence(&sq, &s1).unwrap();
        assert_eq!(seq.iterates, vec![ratio(9, 10), ratio(819, 820)]);

        // Single root: the seed is already the limit, zero steps.
        let single = Poly::from_roots(&[rat(4)], &[1]).unwrap();
        let seq1 = endpoint_sequence(&single, &settings()).unwrap();
        assert_eq!(seq1.iterates, vec![rat(4)]);
        assert_eq!(seq1.stop_reason, StopReason::ClosedForm);

        // Repeated value (y-1)^2: seed 1/2, first step 3/4.
        let twin = Poly::from_roots(&[rat(1)], &[2]).unwrap();
        let seq2 = endpoint_sequence(&twin, &s1).unwrap();
        assert_eq!(seq2.iterates, vec![ratio(1, 2), ratio(3, 4)]);
    }

    #[test]
    fn segment_symmetric_for_even_polynomial() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let seg = build_segment(&p, &settings(), &pow2(-40)).unwrap();
        assert_eq!(seg.a, -&seg.b);
        assert_eq!(seg.alpha_trail.iterates, seg.beta_trail.iterates);
        assert!(seg.a < rat(-1) && rat(1) < seg.b);
        assert!(seg.refined_lo <= rat(-1) && rat(1) <= seg.refined_hi);
        assert!(seg.a < seg.refined_lo && seg.refined_hi < seg.b);
    }

    #[test]
    fn segment_contains_all_roots() {
        let roots = [rat(0), rat(1), rat(3)];
        let p = Poly::from_ints(&[0, 3, -4, 1]);
        let seg = build_segment(&p, &settings(), &pow2(-40)).unwrap();
        for r in &roots {
            assert!(seg.refined_lo <= *r && *r <= seg.refined_hi);
        }
        assert!(seg.a < seg.refined_lo);
        assert!(seg.refined_hi < seg.b);
        for w in seg.radius_trail.iterates.windows(2) {
            assert!(w[1] < w[0]);
        }
        for w in seg.alpha_trail.iterates.windows(2) {
            assert!(w[1] > w[0]);
        }
        for w in seg.beta_trail.iterates.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn segment_single_root_degenerates() {
        let p = Poly::from_ints(&[-5, 1]);
        let seg = build_segment(&p, &settings(), &pow2(-40)).unwrap();
        assert_eq!(seg.a, rat(5));
        assert_eq!(seg.b, rat(5));
        assert_eq!(seg.refined_lo, rat(5));
        assert_eq!(seg.refined_hi, rat(5));
    }

    #[test]
    fn crude_sqrt_precision_keeps_soundness() {
        let p = Poly::from_roots(&[rat(-7), rat(2), rat(3), rat(11)], &[1, 1, 1, 1]).unwrap();
        let seg = build_segment(&p, &settings(), &ratio(1, 10)).unwrap();
        for r in [rat(-7), rat(2), rat(3), rat(11)] {
            assert!(seg.refined_lo <= r && r <= seg.refined_hi);
            assert!(seg.a < r && r < seg.b);
        }
        assert!(seg.a <= seg.refined_lo && seg.refined_hi <= seg.b);
    }

    #[test]
    fn endpoint_limit_matches_nearest_distance() {
        let roots = [rat(0), rat(1), rat(3)];
        let p = Poly::from_ints(&[0, 3, -4, 1]);
        let seg = build_segment(&p, &settings(), &pow2(-40)).unwrap();
        // Alpha limit: squared distance from a to the nearest root.
        let nearest = roots
            .iter()
            .map(|r| {
                let d = r - &seg.a;
                &d * &d
            })
            .min()
            .unwrap();
        assert!(seg.alpha_trail.last() < &nearest);
        assert!(&nearest - seg.alpha_trail.last() < ratio(1, 1_000_000));
    }
}
