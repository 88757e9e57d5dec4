//! Independent ground truth: certified real-root enclosures via Sturm
//! sequences, brute-force gap intervals, and gcd-chain multiplicities.
//!
//! Nothing here is used by the coefficient-only computation paths; the
//! rest of the crate treats this module as the referee its results are
//! checked against. The only shared code is the polynomial kernel.

use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::{Signed, Zero};
use std::fmt;

/// Errors from oracle queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Gap queries need at least two enclosures.
    TooFewRoots,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooFewRoots => write!(f, "need at least two roots"),
        }
    }
}

impl std::error::Error for OracleError {}

/// A rational interval `(lo, hi]` certified by Sturm counts to contain
/// exactly one distinct real root of its target polynomial. Both
/// endpoints are non-roots, so the root in fact lies in the open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: Rat,
    pub hi: Rat,
    /// Sturm sign-change difference across the interval; always 1.
    pub sign_change_count: usize,
}

impl RootEnclosure {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / crate::rat::rat(2)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo < *x && *x <= self.hi
    }
}

/// Signed-remainder sequence of a square-free polynomial, with each
/// member rescaled by a positive constant to keep coefficients small
/// (positive scaling leaves every sign pattern intact). Members are held
/// denominator-cleared so sign queries run on integers: for `b > 0` the
/// sign of `P(a/b)` is the sign of the homogeneous value `b^deg P(a/b)`.
struct SturmChain {
    chain: Vec<Vec<num_bigint::BigInt>>,
}

impl SturmChain {
    fn new(square_free: &Poly) -> Self {
        let mut polys = vec![normalize_positive(square_free)];
        let d = square_free.derivative();
        if !d.is_zero() {
            polys.push(normalize_positive(&d));
        }
        while polys.last().is_some_and(|p| p.degree() > Some(0)) {
            let n = polys.len();
            let rem = polys[n - 2].div_rem(&polys[n - 1]).1;
            if rem.is_zero() {
                break;
            }
            polys.push(normalize_positive(&-&rem));
        }
        SturmChain {
            chain: polys
                .iter()
                .map(crate::poly::cleared_coefficients)
                .collect(),
        }
    }

    fn variations(&self, x: &Rat) -> usize {
        let (a, b) = (x.numer(), x.denom());
        let mut count = 0;
        let mut last: Option<bool> = None;
        for coeffs in &self.chain {
            let v = crate::poly::eval_homogeneous(coeffs, a, b);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Distinct roots in the open interval `(a, b)`; both endpoints must
    /// be non-roots of the square-free polynomial.
    fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Divides by the absolute value of the leading coefficient.
fn normalize_positive(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some(lead) => {
            let scale = lead.abs().recip();
            Poly::from_coeffs(p.coeffs().iter().map(|c| c * &scale).collect())
        }
    }
}

/// Strict bound on root magnitude: every root of `p` satisfies |x| < bound.
fn cauchy_bound(p: &Poly) -> Rat {
    let lead = p.leading().expect("bound of the zero polynomial").abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    crate::rat::rat(1) + max_ratio
}

/// A midpoint of `(lo, hi)` at which the polynomial (given by cleared
/// coefficients) does not vanish: the plain midpoint when possible,
/// otherwise a nearby point found by shrinking the offset.
fn splitting_point(cleared: &[num_bigint::BigInt], lo: &Rat, hi: &Rat) -> Rat {
    let vanishes = |x: &Rat| crate::poly::eval_homogeneous(cleared, x.numer(), x.denom()).is_zero();
    let mid = (lo + hi) / crate::rat::rat(2);
    if !vanishes(&mid) {
        return mid;
    }
    // mid is an exact root; nudge by ever-smaller offsets. Finitely many
    // roots exist, so this terminates.
    let mut offset = (hi - lo) / crate::rat::rat(4);
    loop {
        let candidate = &mid + &offset;
        if !vanishes(&candidate) {
            return candidate;
        }
        offset /= crate::rat::rat(2);
    }
}

/// Isolates all distinct real roots of `p` into disjoint enclosures of
/// width at most `width`, sorted ascending. Complex roots simply do not
/// appear. The isolation runs on the square-free part, so multiple roots
/// are enclosed once each.
pub fn isolate_real_roots(p: &Poly, width: &Rat) -> Vec<RootEnclosure> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(width.is_positive(), "enclosure width must be positive");
    let sqfree = p.square_free_part();
    if sqfree.degree() == Some(0) {
        return Vec::new();
    }
    let cleared = crate::poly::cleared_coefficients(&sqfree);
    let chain = SturmChain::new(&sqfree);
    let bound = cauchy_bound(&sqfree);
    let lo = -&bound;
    let hi = bound;
    let total = chain.count(&lo, &hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && &b - &a <= *width {
            out.push(RootEnclosure {
                lo: a,
                hi: b,
                sign_change_count: 1,
            });
            continue;
        }
        let mid = splitting_point(&cleared, &a, &b);
        let left = chain.count(&a, &mid);
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, count - left));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Shrinks an existing enclosure of a root of `p` to the requested width.
pub fn refine(p: &Poly, enclosure: &RootEnclosure, width: &Rat) -> RootEnclosure {
    assert!(width.is_positive());
    let sqfree = p.square_free_part();
    let cleared = crate::poly::cleared_coefficients(&sqfree);
    let chain = SturmChain::new(&sqfree);
    let mut lo = enclosure.lo.clone();
    let mut hi = enclosure.hi.clone();
    debug_assert_eq!(chain.count(&lo, &hi), 1, "enclosure does not isolate a root");
    while &hi - &lo > *width {
        let mid = splitting_point(&cleared, &lo, &hi);
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootEnclosure {
        lo,
        hi,
        sign_change_count: 1,
    }
}

/// A rational interval known to contain an exact (possibly irrational)
/// quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn contains(&self, x: &Rat) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

/// Interval-arithmetic bounds for the minimal and maximal root gap from
/// sorted disjoint enclosures: the minimal gap is attained between
/// adjacent roots, the maximal between the outermost pair.
pub fn brute_force_gaps(enclosures: &[RootEnclosure]) -> Result<(Interval, Interval), OracleError> {
    if enclosures.len() < 2 {
        return Err(OracleError::TooFewRoots);
    }
    let mut sorted = enclosures.to_vec();
    sorted.sort_by(|x, y| x.lo.cmp(&y.lo));
    let mut min_lo: Option<Rat> = None;
    let mut min_hi: Option<Rat> = None;
    for pair in sorted.windows(2) {
        let lo = &pair[1].lo - &pair[0].hi;
        let hi = &pair[1].hi - &pair[0].lo;
        if min_lo.as_ref().is_none_or(|v| lo < *v) {
            min_lo = Some(lo);
        }
        if min_hi.as_ref().is_none_or(|v| hi < *v) {
            min_hi = Some(hi);
        }
    }
    let first = &sorted[0];
    let last = &sorted[sorted.len() - 1];
    let max_interval = Interval {
        lo: &last.lo - &first.hi,
        hi: &last.hi - &first.lo,
    };
    Ok((
        Interval {
            lo: min_lo.unwrap(),
            hi: min_hi.unwrap(),
        },
        max_interval,
    ))
}

/// Exact minimal and maximal pairwise distance of an explicit root list;
/// test scaffolding for constructed inputs. `None` for fewer than two
/// roots.
pub fn exact_gaps(roots: &[Rat]) -> Option<(Rat, Rat)> {
    if roots.len() < 2 {
        return None;
    }
    let mut min: Option<Rat> = None;
    let mut max: Option<Rat> = None;
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            let d = (&roots[i] - &roots[j]).abs();
            if min.as_ref().is_none_or(|v| d < *v) {
                min = Some(d.clone());
            }
            if max.as_ref().is_none_or(|v| d > *v) {
                max = Some(d);
            }
        }
    }
    Some((min.unwrap(), max.unwrap()))
}

/// Per-root multiplicities from the derivative gcd chain: a root of
/// multiplicity `r` survives the first `r - 1` gcd steps. Returns one
/// entry per distinct real root, sorted ascending.
pub fn multiplicities_via_gcd(p: &Poly) -> Vec<(RootEnclosure, usize)> {
    assert!(!p.is_zero());
    let enclosures = isolate_real_roots(p, &crate::rat::ratio(1, 1024));
    // g_0 = p, g_{i+1} = gcd(g_i, g_i'); level i keeps roots of
    // multiplicity > i.
    let mut levels = Vec::new();
    let mut g = p.monic();
    while g.degree().is_some_and(|d| d >= 1) {
        levels.push(g.square_free_part());
        let next = g.gcd(&g.derivative());
        g = next;
    }
    enclosures
        .into_iter()
        .map(|e| {
            let mult = levels
                .iter()
                .take_while(|level| {
                    let chain = SturmChain::new(level);
                    chain.count(&e.lo, &e.hi) == 1
                })
                .count();
            (e, mult)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{parse_rat, rat, ratio};

    #[test]
    fn isolates_quadratic() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let encl = isolate_real_roots(&p, &ratio(1, 100));
        assert_eq!(encl.len(), 2);
        assert!(encl[0].contains(&rat(-1)));
        assert!(encl[1].contains(&rat(1)));
        for e in &encl {
            assert!(e.width() <= ratio(1, 100));
            assert_eq!(e.sign_change_count, 1);
        }
    }

    #[test]
    fn isolates_rational_roots_exactly() {
        let p = Poly::from_ints(&[0, 3, -4, 1]);
        let encl = isolate_real_roots(&p, &ratio(1, 1000));
        assert_eq!(encl.len(), 3);
        for (e, root) in encl.iter().zip([rat(0), rat(1), rat(3)]) {
            assert!(e.contains(&root), "enclosure {:?} misses {root}", e);
        }
    }

    #[test]
    fn no_real_roots_gives_empty() {
        let p = Poly::from_ints(&[1, 0, 1]);
        assert!(isolate_real_roots(&p, &ratio(1, 10)).is_empty());
    }

    #[test]
    fn repeated_roots_enclosed_once() {
        // (x-1)^2 (x-2)
        let p = Poly::from_ints(&[-2, 5, -4, 1]);
        let encl = isolate_real_roots(&p, &ratio(1, 100));
        assert_eq!(encl.len(), 2);
        assert!(encl[0].contains(&rat(1)));
        assert!(encl[1].contains(&rat(2)));
    }

    #[test]
    fn refinement_halves_width() {
        let p = Poly::from_ints(&[-2, 0, 1]); // sqrt(2)
        let coarse = isolate_real_roots(&p, &ratio(1, 4));
        for e in coarse {
            let w = e.width();
            let fine = refine(&p, &e, &(&w / rat(2)));
            assert!(fine.width() <= &w / rat(2));
            assert!(fine.lo >= e.lo && fine.hi <= e.hi);
        }
    }

    #[test]
    fn gap_intervals() {
        let p = Poly::from_ints(&[0, 3, -4, 1]); // roots 0, 1, 3
        let width = parse_rat("1e-6").unwrap();
        let encl = isolate_real_roots(&p, &width);
        let (min_gap, max_gap) = brute_force_gaps(&encl).unwrap();
        assert!(min_gap.contains(&rat(1)));
        assert!(max_gap.contains(&rat(3)));

        let two = isolate_real_roots(&Poly::from_ints(&[-1, 0, 1]), &width);
        let (mn, mx) = brute_force_gaps(&two).unwrap();
        assert!(mn.contains(&rat(2)));
        assert!(mx.contains(&rat(2)));

        let w4 = Poly::from_roots(&[rat(0), rat(1), rat(2), rat(3)], &[1, 1, 1, 1]).unwrap();
        let encl4 = isolate_real_roots(&w4, &width);
        let (mn4, mx4) = brute_force_gaps(&encl4).unwrap();
        assert!(mn4.contains(&rat(1)));
        assert!(mx4.contains(&rat(3)));

        let one = isolate_real_roots(&Poly::from_ints(&[-5, 1]), &width);
        assert_eq!(brute_force_gaps(&one), Err(OracleError::TooFewRoots));
    }

    #[test]
    fn multiplicities_examples() {
        let p = Poly::from_ints(&[-2, 5, -4, 1]); // (x-1)^2 (x-2)
        let mults = multiplicities_via_gcd(&p);
        assert_eq!(mults.len(), 2);
        assert!(mults[0].0.contains(&rat(1)));
        assert_eq!(mults[0].1, 2);
        assert!(mults[1].0.contains(&rat(2)));
        assert_eq!(mults[1].1, 1);

        let q = Poly::from_ints(&[-1, 0, 1]);
        let mq = multiplicities_via_gcd(&q);
        assert_eq!(mq.iter().map(|(_, r)| *r).collect::<Vec<_>>(), vec![1, 1]);

        let quartic = Poly::from_roots(&[rat(5)], &[4]).unwrap();
        let m4 = multiplicities_via_gcd(&quartic);
        assert_eq!(m4.len(), 1);
        assert!(m4[0].0.contains(&rat(5)));
        assert_eq!(m4[0].1, 4);
    }

    #[test]
    fn multiplicities_sum_to_degree() {
        let p = Poly::from_roots(
            &[rat(-3), ratio(1, 2), rat(4)],
            &[3, 1, 2],
        )
        .unwrap();
        let mults = multiplicities_via_gcd(&p);
        let total: usize = mults.iter().map(|(_, r)| r).sum();
        assert_eq!(Some(total), p.degree().map(|d| d));
        assert_eq!(
            mults.iter().map(|(_, r)| *r).collect::<Vec<_>>(),
            vec![3, 1, 2]
        );
    }

    #[test]
    fn exact_gap_helper() {
        let (mn, mx) = exact_gaps(&[rat(0), rat(1), rat(3)]).unwrap();
        assert_eq!(mn, rat(1));
        assert_eq!(mx, rat(3));
        assert!(exact_gaps(&[rat(7)]).is_none());
    }
}
