//! Power sums, the Hankel determinant ladder, distinct-root counting with
//! real-rootedness certification, minimal-polynomial extraction, and
//! multiplicity certification.
//!
//! The determinant ladder `D_1, D_2, ...` of the Hankel matrices built
//! from power sums is strictly positive up to the number of distinct
//! roots and zero from there on — for real-rooted input. Any other sign
//! pattern certifies that some root is not real, which is a hard error
//! here because every convergence argument downstream needs real roots.
//!
//! The minimal polynomial is produced twice on polynomial input: once
//! from signed minors of the bordered Hankel matrix, once as the
//! square-free part of the input. The two routes share nothing beyond
//! polynomial arithmetic, so their agreement is a meaningful certificate,
//! and disagreement is reported as an internal fault rather than papered
//! over.

use crate::matrix::RatMatrix;
use crate::oracle::{self, RootEnclosure};
use crate::poly::Poly;
use crate::rat::{rat, rat_str, round_to_nearest_int, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Errors from the Hankel formalism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HankelError {
    /// Power sums of the zero polynomial were requested.
    ZeroPolynomial,
    /// The input has no roots (nonzero constant).
    NoRoots,
    /// Matrix input is not square or not symmetric.
    NotHermitian,
    /// Fewer power sums available than the operation needs.
    NotEnoughSums,
    /// The determinant ladder violates the real-rooted sign pattern.
    NotRealRooted { k: usize, det: Rat },
    /// The top Hankel determinant vanished where a rank-`m` matrix was
    /// expected.
    InconsistentRank,
    /// The Hankel matrix handed to a Gram product is singular.
    SingularHankel,
    /// No integer multiplicity within tolerance after the refinement
    /// budget.
    MultiplicityUnresolved,
    /// The two minimal-polynomial routes disagree (internal fault).
    MinimalPolynomialMismatch,
}

impl fmt::Display for HankelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HankelError::ZeroPolynomial => write!(f, "zero polynomial"),
            HankelError::NoRoots => write!(f, "polynomial has no roots"),
            HankelError::NotHermitian => write!(f, "matrix is not square and symmetric"),
            HankelError::NotEnoughSums => write!(f, "not enough power sums"),
            HankelError::NotRealRooted { k, det } => {
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
            HankelError::InconsistentRank => write!(f, "top Hankel determinant is zero"),
            HankelError::SingularHankel => write!(f, "singular Hankel matrix"),
            HankelError::MultiplicityUnresolved => {
                write!(f, "multiplicity did not resolve to an integer within tolerance")
            }
            HankelError::MinimalPolynomialMismatch => {
                write!(f, "minimal-polynomial routes disagree (internal fault)")
            }
        }
    }
}

impl std::error::Error for HankelError {}

/// Power sums `t_k = sum_l r_l p_l^k` of all roots counted with
/// multiplicity; `t_0` equals the input degree (or matrix size).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSums {
    pub t: Vec<Rat>,
    /// Total degree: the number of roots counted with multiplicity.
    pub n: usize,
}

impl PowerSums {
    pub fn get(&self, k: usize) -> &Rat {
        &self.t[k]
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

/// Power sums of the roots of `p` via Newton's identities on its monic
/// normalization; `count` values `t_0 .. t_{count-1}`.
pub fn power_sums_from_coeffs(p: &Poly, count: usize) -> Result<PowerSums, HankelError> {
    if p.is_zero() {
        return Err(HankelError::ZeroPolynomial);
    }
    assert!(count >= 1, "need at least one power sum");
    let monic = p.monic();
    let n = monic.degree().unwrap();
    // Elementary symmetric functions with sign: e_k = (-1)^k c_{n-k}.
    let e: Vec<Rat> = (1..=n)
        .map(|k| {
            let c = monic.coeff(n - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut t = Vec::with_capacity(count);
    t.push(rat(n as i64));
    for k in 1..count {
        let mut acc = Rat::zero();
        for i in 1..=k.min(n) {
            if i == k {
                // Final Newton term: (-1)^{k-1} k e_k, present while k <= n.
                let term = &e[i - 1] * rat(k as i64);
                acc += if k % 2 == 1 { term } else { -term };
            } else {
                let term = &e[i - 1] * &t[k - i];
                acc += if i % 2 == 1 { term } else { -term };
            }
        }
        t.push(acc);
    }
    Ok(PowerSums { t, n })
}

/// Power sums as traces of matrix powers of a symmetric rational matrix.
/// A complex Hermitian operator must be supplied as its real-symmetric
/// block embedding, which doubles every multiplicity; see the report
/// layer for the halving convention.
pub fn power_sums_from_hermitian(a: &RatMatrix, count: usize) -> Result<PowerSums, HankelError> {
    if !a.is_square() || !a.is_symmetric() {
        return Err(HankelError::NotHermitian);
    }
    assert!(count >= 1, "need at least one power sum");
    let n = a.rows();
    let mut t = Vec::with_capacity(count);
    let mut current = RatMatrix::identity(n);
    t.push(current.trace());
    for _ in 1..count {
        current = current.mul(a);
        t.push(current.trace());
    }
    Ok(PowerSums { t, n })
}

/// The `k x k` Hankel matrix `[t_{i+j}]` (zero-based indices).
pub fn hankel_matrix(sums: &PowerSums, k: usize) -> RatMatrix {
    assert!(sums.len() >= 2 * k - 1, "not enough power sums for H_k");
    RatMatrix::from_fn(k, |i, j| sums.get(i + j).clone())
}

/// The ladder `[D_1, ..., D_n]`, each an exact fraction-free determinant.
pub fn hankel_determinants(sums: &PowerSums, n: usize) -> Result<Vec<Rat>, HankelError> {
    assert!(n >= 1);
    if sums.len() < 2 * n - 1 {
        return Err(HankelError::NotEnoughSums);
    }
    Ok((1..=n)
        .map(|k| hankel_matrix(sums, k).determinant())
        .collect())
}

/// Number of distinct roots: the largest `k` with `D_k != 0`, certified
/// against the real-rooted sign pattern (`D_k > 0` up to there, zero
/// beyond). Any violation reports the offending determinant.
pub fn distinct_root_count(dets: &[Rat]) -> Result<usize, HankelError> {
    if dets.is_empty() {
        return Err(HankelError::NotEnoughSums);
    }
    let m = dets
        .iter()
        .rposition(|d| !d.is_zero())
        .map(|idx| idx + 1)
        .unwrap_or(0);
    if m == 0 {
        // t_0 = n >= 1 makes D_1 > 0; an all-zero ladder means no input.
        return Err(HankelError::NoRoots);
    }
    for (idx, d) in dets.iter().enumerate().take(m) {
        if !d.is_positive() {
            return Err(HankelError::NotRealRooted {
                k: idx + 1,
                det: d.clone(),
            });
        }
    }
    Ok(m)
}

/// Monic minimal polynomial of degree `m` together with the elementary
/// symmetric functions `sigma_1 .. sigma_m` of the distinct roots.
///
/// Coefficient of `x^j` is `(-1)^{m+j}` times the minor of the bordered
/// Hankel matrix obtained by deleting the variable row and column `j`,
/// divided by `D_m`.
pub fn minimal_polynomial(sums: &PowerSums, m: usize) -> Result<(Poly, Vec<Rat>), HankelError> {
    assert!(m >= 1);
    if sums.len() < 2 * m {
        return Err(HankelError::NotEnoughSums);
    }
    let d_m = hankel_matrix(sums, m).determinant();
    if d_m.is_zero() {
        return Err(HankelError::InconsistentRank);
    }
    let mut coeffs = Vec::with_capacity(m + 1);
    for j in 0..=m {
        // Minor: rows 0..m of [t_{i+j}] with column j deleted.
        let minor = RatMatrix::from_fn(m, |r, c| {
            let col = if c < j { c } else { c + 1 };
            sums.get(r + col).clone()
        })
        .determinant();
        let signed = if (m + j).is_multiple_of(2) { minor } else { -minor };
        coeffs.push(signed / &d_m);
    }
    let minimal = Poly::from_coeffs(coeffs);
    debug_assert!(minimal.is_monic() && minimal.degree() == Some(m));
    let sigma = (1..=m)
        .map(|k| {
            let c = minimal.coeff(m - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok((minimal, sigma))
}

/// The bilinear form `<v(x) H^{-1} v(y)^T>` on power rows
/// `v(x) = [1, x, ..., x^{m-1}]`. At exact distinct roots this is the
/// Kronecker delta over the root's multiplicity.
pub fn gram_product(x: &Rat, y: &Rat, h: &RatMatrix) -> Result<Rat, HankelError> {
    assert!(h.is_square());
    let m = h.rows();
    let vy: Vec<Rat> = power_row(y, m);
    let w = h.solve(&vy).ok_or(HankelError::SingularHankel)?;
    let vx = power_row(x, m);
    Ok(vx.iter().zip(&w).map(|(a, b)| a * b).sum())
}

fn power_row(x: &Rat, m: usize) -> Vec<Rat> {
    let mut row = Vec::with_capacity(m);
    let mut acc = Rat::one();
    for _ in 0..m {
        row.push(acc.clone());
        acc *= x;
    }
    row
}

/// Certified multiplicity of the root enclosed by `enclosure`: evaluates
/// the Gram form at a rational point inside the enclosure, rounds its
/// reciprocal to the nearest positive integer `r`, and accepts once the
/// form value is within `tol` of `1/r`, refining the enclosure and
/// retrying otherwise.
pub fn multiplicity(
    minimal: &Poly,
    h_m: &RatMatrix,
    enclosure: &RootEnclosure,
    tol: &Rat,
    max_refinements: u32,
) -> Result<usize, HankelError> {
    assert!(tol.is_positive());
    let mut current = enclosure.clone();
    for _ in 0..=max_refinements {
        let x = current.midpoint();
        let value = gram_product(&x, &x, h_m)?;
        if value.is_positive() {
            let r_int = round_to_nearest_int(&value.recip());
            if r_int >= BigInt::one() {
                let r = Rat::from_integer(r_int.clone());
                if (&value - r.recip()).abs() < *tol {
                    return Ok(r_int.to_usize().expect("desk-scale multiplicity"));
                }
            }
        }
        let half = current.width() / rat(2);
        current = oracle::refine(minimal, &current, &half);
    }
    Err(HankelError::MultiplicityUnresolved)
}

/// Everything the Hankel formalism extracts from one input.
#[derive(Debug, Clone)]
pub struct HankelReport {
    pub sums: PowerSums,
    /// `D_1 .. D_n`.
    pub dets: Vec<Rat>,
    /// Number of distinct roots.
    pub m: usize,
    /// Monic minimal polynomial of degree `m`.
    pub minimal: Poly,
    /// Elementary symmetric functions of the distinct roots.
    pub sigma: Vec<Rat>,
}

/// Full Hankel analysis of a polynomial. The minimal polynomial is
/// cross-checked against the square-free part; disagreement is an
/// internal fault.
pub fn report_from_polynomial(p: &Poly) -> Result<HankelReport, HankelError> {
    if p.is_zero() {
        return Err(HankelError::ZeroPolynomial);
    }
    let n = p.degree().unwrap();
    if n == 0 {
        return Err(HankelError::NoRoots);
    }
    let sums = power_sums_from_coeffs(p, 2 * n)?;
    let dets = hankel_determinants(&sums, n)?;
    let m = distinct_root_count(&dets)?;
    let (minimal, sigma) = minimal_polynomial(&sums, m)?;
    if minimal != p.square_free_part() {
        return Err(HankelError::MinimalPolynomialMismatch);
    }
    Ok(HankelReport {
        sums,
        dets,
        m,
        minimal,
        sigma,
    })
}

/// Full Hankel analysis of a symmetric rational matrix. Here the
/// cross-check evaluates the minimal polynomial at the matrix and
/// demands the zero matrix.
pub fn report_from_hermitian(a: &RatMatrix) -> Result<HankelReport, HankelError> {
    if !a.is_square() || !a.is_symmetric() {
        return Err(HankelError::NotHermitian);
    }
    let n = a.rows();
    if n == 0 {
        return Err(HankelError::NoRoots);
    }
    let sums = power_sums_from_hermitian(a, 2 * n)?;
    let dets = hankel_determinants(&sums, n)?;
    let m = distinct_root_count(&dets)?;
    let (minimal, sigma) = minimal_polynomial(&sums, m)?;
    if !eval_at_matrix(&minimal, a).is_zero() {
        return Err(HankelError::MinimalPolynomialMismatch);
    }
    Ok(HankelReport {
        sums,
        dets,
        m,
        minimal,
        sigma,
    })
}

/// `p(A)` by Horner over matrices.
fn eval_at_matrix(p: &Poly, a: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    let mut acc = RatMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).add(&RatMatrix::identity(n).scale(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn sums_of(coeffs: &[i64], count: usize) -> PowerSums {
        power_sums_from_coeffs(&Poly::from_ints(coeffs), count).unwrap()
    }

    /// Brute-force power sums over an explicit (root, multiplicity) list.
    fn brute_sums(roots: &[(i64, usize)], count: usize) -> Vec<Rat> {
        (0..count)
            .map(|k| {
                roots
                    .iter()
                    .map(|&(r, mult)| rat(mult as i64) * rat(r).pow(k as i32))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(sums_of(&[-1, 0, 1], 4).t, brute_sums(&[(1, 1), (-1, 1)], 4));
        assert_eq!(
            sums_of(&[-1, 0, 1], 4).t,
            vec![rat(2), rat(0), rat(2), rat(0)]
        );
        assert_eq!(
            sums_of(&[-2, 5, -4, 1], 5).t,
            brute_sums(&[(1, 2), (2, 1)], 5)
        );
        assert_eq!(
            sums_of(&[-2, 5, -4, 1], 5).t,
            vec![rat(3), rat(4), rat(6), rat(10), rat(18)]
        );
        assert_eq!(
            sums_of(&[0, 3, -4, 1], 5).t,
            vec![rat(3), rat(4), rat(10), rat(28), rat(82)]
        );
        assert_eq!(
            power_sums_from_coeffs(&Poly::zero(), 3),
            Err(HankelError::ZeroPolynomial)
        );
    }

    #[test]
    fn power_sums_from_matrices() {
        let diag = RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(2)],
        ])
        .unwrap();
        let s = power_sums_from_hermitian(&diag, 3).unwrap();
        assert_eq!(s.t, vec![rat(3), rat(4), rat(6)]);

        let flip = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        assert_eq!(
            power_sums_from_hermitian(&flip, 3).unwrap().t,
            vec![rat(2), rat(0), rat(2)]
        );

        let diag2 = RatMatrix::from_rows(vec![
            vec![rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(3)],
        ])
        .unwrap();
        assert_eq!(
            power_sums_from_hermitian(&diag2, 3).unwrap().t,
            sums_of(&[0, 3, -4, 1], 3).t
        );

        let skew = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]).unwrap();
        assert_eq!(
            power_sums_from_hermitian(&skew, 2),
            Err(HankelError::NotHermitian)
        );
    }

    #[test]
    fn determinant_ladder_examples() {
        let s = sums_of(&[0, 3, -4, 1], 5);
        assert_eq!(
            hankel_determinants(&s, 3).unwrap(),
            vec![rat(3), rat(14), rat(36)]
        );

        let s2 = sums_of(&[-2, 5, -4, 1], 5);
        assert_eq!(
            hankel_determinants(&s2, 3).unwrap(),
            vec![rat(3), rat(2), rat(0)]
        );

        let complex = sums_of(&[1, 0, 1], 3);
        assert_eq!(
            hankel_determinants(&complex, 2).unwrap(),
            vec![rat(2), rat(-4)]
        );

        assert_eq!(
            hankel_determinants(&sums_of(&[-1, 0, 1], 2), 3),
            Err(HankelError::NotEnoughSums)
        );
    }

    #[test]
    fn distinct_root_count_examples() {
        assert_eq!(distinct_root_count(&[rat(3), rat(14), rat(36)]).unwrap(), 3);
        assert_eq!(distinct_root_count(&[rat(3), rat(2), rat(0)]).unwrap(), 2);
        assert_eq!(
            distinct_root_count(&[rat(2), rat(-4)]),
            Err(HankelError::NotRealRooted {
                k: 2,
                det: rat(-4)
            })
        );
        // A vanishing determinant before a nonzero one is equally fatal.
        assert_eq!(
            distinct_root_count(&[rat(4), rat(0), rat(-64)]),
            Err(HankelError::NotRealRooted { k: 2, det: rat(0) })
        );
    }

    #[test]
    fn minimal_polynomial_examples() {
        let s = sums_of(&[-2, 5, -4, 1], 4);
        let (p, sigma) = minimal_polynomial(&s, 2).unwrap();
        assert_eq!(p, Poly::from_ints(&[2, -3, 1]));
        assert_eq!(sigma, vec![rat(3), rat(2)]);

        let s2 = sums_of(&[-1, 0, 1], 4);
        let (p2, _) = minimal_polynomial(&s2, 2).unwrap();
        assert_eq!(p2, Poly::from_ints(&[-1, 0, 1]));

        // (x-1)^3 has a single distinct root.
        let s3 = sums_of(&[-1, 3, -3, 1], 2);
        let (p3, sigma3) = minimal_polynomial(&s3, 1).unwrap();
        assert_eq!(p3, Poly::from_ints(&[-1, 1]));
        assert_eq!(sigma3, vec![rat(1)]);
    }

    #[test]
    fn gram_product_examples() {
        let s = sums_of(&[-2, 5, -4, 1], 4);
        let h2 = hankel_matrix(&s, 2);
        assert_eq!(gram_product(&rat(1), &rat(2), &h2).unwrap(), rat(0));
        assert_eq!(gram_product(&rat(1), &rat(1), &h2).unwrap(), ratio(1, 2));
        assert_eq!(gram_product(&rat(2), &rat(2), &h2).unwrap(), rat(1));

        let s2 = sums_of(&[-1, 0, 1], 4);
        let h = hankel_matrix(&s2, 2);
        assert_eq!(gram_product(&rat(1), &rat(-1), &h).unwrap(), rat(0));

        let singular =
            RatMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]).unwrap();
        assert_eq!(
            gram_product(&rat(1), &rat(1), &singular),
            Err(HankelError::SingularHankel)
        );
    }

    #[test]
    fn multiplicity_certification() {
        let p = Poly::from_ints(&[-2, 5, -4, 1]);
        let report = report_from_polynomial(&p).unwrap();
        let h2 = hankel_matrix(&report.sums, report.m);
        let tol = ratio(1, 1_000_000);
        let enclosures = oracle::isolate_real_roots(&report.minimal, &ratio(1, 64));
        assert_eq!(enclosures.len(), 2);
        assert_eq!(
            multiplicity(&report.minimal, &h2, &enclosures[0], &tol, 60).unwrap(),
            2
        );
        assert_eq!(
            multiplicity(&report.minimal, &h2, &enclosures[1], &tol, 60).unwrap(),
            1
        );
    }

    #[test]
    fn report_cross_checks_square_free_route() {
        let p = Poly::from_roots(&[rat(-2), ratio(1, 2), rat(3)], &[2, 1, 3]).unwrap();
        let report = report_from_polynomial(&p).unwrap();
        assert_eq!(report.m, 3);
        assert_eq!(report.minimal, p.square_free_part());
        // Vieta consistency of the sigma list.
        for (k, s) in report.sigma.iter().enumerate() {
            let c = report.minimal.coeff(report.m - (k + 1));
            let expect = if (k + 1) % 2 == 0 { c } else { -c };
            assert_eq!(*s, expect);
        }
    }

    #[test]
    fn report_from_matrix_matches_polynomial_route() {
        let diag = RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(2)],
        ])
        .unwrap();
        let ra = report_from_hermitian(&diag).unwrap();
        let rp = report_from_polynomial(&Poly::from_ints(&[-2, 5, -4, 1])).unwrap();
        assert_eq!(ra.m, rp.m);
        assert_eq!(ra.minimal, rp.minimal);
        assert_eq!(ra.dets, rp.dets);

        // Non-diagonal symmetric matrix: eigenvalues 3 and -1.
        let sym = RatMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(1)]]).unwrap();
        let rs = report_from_hermitian(&sym).unwrap();
        assert_eq!(rs.m, 2);
        assert_eq!(rs.minimal, Poly::from_ints(&[-3, -2, 1]));
    }

    #[test]
    fn report_rejects_complex_roots() {
        let err = report_from_polynomial(&Poly::from_ints(&[1, 0, 1])).unwrap_err();
        assert_eq!(
            err,
            HankelError::NotRealRooted {
                k: 2,
                det: rat(-4)
            }
        );
        assert_eq!(format!("{err}"), "not real-rooted: D_2 = -4/1 < 0");
    }

    #[test]
    fn pairwise_square_identity_for_d2() {
        // D_2 = t_0 t_2 - t_1^2, and for simple roots the sum of squared
        // differences.
        let roots = [rat(-3), rat(1), rat(4), rat(9)];
        let p = Poly::from_roots(&roots, &[1, 1, 1, 1]).unwrap();
        let s = power_sums_from_coeffs(&p, 7).unwrap();
        let dets = hankel_determinants(&s, 4).unwrap();
        assert_eq!(dets[1], s.get(0) * s.get(2) - s.get(1) * s.get(1));
        let mut pair_sum = Rat::zero();
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                pair_sum += (&roots[j] - &roots[i]).pow(2);
            }
        }
        assert_eq!(dets[1], pair_sum);
    }

    #[test]
    fn gram_matrix_is_inverse_multiplicity_diagonal() {
        let roots = [rat(-1), rat(2), rat(5)];
        let mults = [2usize, 3, 1];
        let p = Poly::from_roots(&roots, &mults).unwrap();
        let report = report_from_polynomial(&p).unwrap();
        let h = hankel_matrix(&report.sums, report.m);
        for (i, ri) in roots.iter().enumerate() {
            for (j, rj) in roots.iter().enumerate() {
                let g = gram_product(ri, rj, &h).unwrap();
                let expect = if i == j {
                    Rat::one() / rat(mults[i] as i64)
                } else {
                    Rat::zero()
                };
                assert_eq!(g, expect, "Gram entry ({i},{j})");
            }
        }
    }
}
