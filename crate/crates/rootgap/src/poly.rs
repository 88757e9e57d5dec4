//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial is the empty list. This module is the
//! arithmetic kernel for everything else: Taylor shifts, gcd and
//! square-free parts, the difference resultant whose roots are squared
//! pairwise root gaps, and the even-part substitution that rewrites an
//! even polynomial in terms of its squared variable.

use crate::matrix::RatMatrix;
use crate::rat::Rat;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors from polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `from_roots` was given the same root twice.
    DuplicateRoot,
    /// The difference resultant requires a square-free input.
    NotSquareFree,
    /// `even_substitute` found a nonzero odd-degree coefficient.
    NotEven,
    /// The operation needs degree at least two.
    TooFewRoots,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DuplicateRoot => write!(f, "duplicate root"),
            PolyError::NotSquareFree => write!(f, "polynomial is not square-free"),
            PolyError::NotEven => write!(f, "polynomial has a nonzero odd-degree coefficient"),
            PolyError::TooFewRoots => write!(f, "operation requires degree at least 2"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Dense polynomial over [`Rat`], ascending coefficient order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| crate::rat::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Same roots, leading coefficient one. Zero maps to zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) if lead.is_one() => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    /// Returns `q` with `q(x) = p(x + c)`, computed exactly by Horner in
    /// the polynomial ring.
    pub fn taylor_shift(&self, c: &Rat) -> Poly {
        let mut acc: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        for coeff in self.coeffs.iter().rev() {
            // acc = acc * (x + c) + coeff
            let mut next = vec![Rat::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] += a * c;
            }
            if next.is_empty() {
                next.push(Rat::zero());
            }
            next[0] += coeff;
            acc = next;
        }
        Poly::from_coeffs(acc)
    }

    /// Monic product `prod (x - root_i)^{mult_i}`.
    pub fn from_roots(roots: &[Rat], mults: &[usize]) -> Result<Poly, PolyError> {
        assert_eq!(roots.len(), mults.len(), "roots and multiplicities must pair up");
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                if roots[i] == roots[j] {
                    return Err(PolyError::DuplicateRoot);
                }
            }
        }
        let mut p = Poly::one();
        for (root, &mult) in roots.iter().zip(mults) {
            assert!(mult >= 1, "multiplicities must be positive");
            let factor = Poly::from_coeffs(vec![-root.clone(), Rat::one()]);
            for _ in 0..mult {
                p = &p * &factor;
            }
        }
        Ok(p)
    }

    /// Quotient and remainder of division by `divisor` (a field, so exact).
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (Poly::zero(), self.clone());
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![Rat::zero(); q_len];
        for k in (0..q_len).rev() {
            let c = &rem[k + d_deg] / &d_lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let sub = &c * dc;
                    rem[k + j] = &rem[k + j] - &sub;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor by the Euclidean remainder sequence,
    /// with monic normalization at each step to keep coefficients small.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, monic: the minimal polynomial of the root set
    /// when all roots are real.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
            .expect("gcd divides its argument")
            .monic()
    }

    /// Whether `gcd(p, p')` is constant.
    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// For monic square-free `p` of degree `m >= 2`, the polynomial
    /// `Res_x(p(x), p(x+z)) / z^m = prod_{i<j} (z^2 - (p_i - p_j)^2)`,
    /// even of degree `m(m-1)`, with repeated gap values retained.
    ///
    /// Computed by evaluation at `m^2 + 1` small integers (each value a
    /// fraction-free Sylvester determinant) followed by exact
    /// interpolation, so no step leaves the rationals.
    pub fn difference_resultant(&self) -> Result<Poly, PolyError> {
        let m = match self.degree() {
            Some(m) if m >= 2 => m,
            _ => return Err(PolyError::TooFewRoots),
        };
        let p = self.monic();
        if !p.is_square_free() {
            return Err(PolyError::NotSquareFree);
        }
        let n_points = m * m + 1;
        let mut points = Vec::with_capacity(n_points);
        for step in 0..n_points {
            // 0, 1, -1, 2, -2, ...
            let k = (step as i64 + 1) / 2;
            let z = crate::rat::rat(if step % 2 == 1 { k } else { -k });
            let shifted = p.taylor_shift(&z);
            let value = sylvester_resultant(&p, &shifted);
            points.push((z, value));
        }
        let full = interpolate(&points);
        // The lowest m coefficients carry the z^m factor and must vanish.
        if full.coeffs.iter().take(m).any(|c| !c.is_zero()) {
            return Err(PolyError::NotSquareFree);
        }
        if full.coeffs.len() <= m {
            return Err(PolyError::NotSquareFree);
        }
        Ok(Poly::from_coeffs(full.coeffs[m..].to_vec()))
    }

    /// For `p` with only even-degree terms, returns `q` with `q(z^2) = p(z)`.
    pub fn even_substitute(&self) -> Result<Poly, PolyError> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(PolyError::NotEven);
        }
        Ok(Poly::from_coeffs(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Coefficients scaled by the positive common denominator: an integer
/// vector with the same roots and sign pattern as `p`.
pub(crate) fn cleared_coefficients(p: &Poly) -> Vec<num_bigint::BigInt> {
    use num_integer::Integer;
    let mut scale = num_bigint::BigInt::one();
    for c in p.coeffs() {
        scale = scale.lcm(c.denom());
    }
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect()
}

/// Homogeneous integer evaluation: `b^deg * P(a/b)` for integer
/// coefficients. For `b > 0` its sign equals the sign of `P(a/b)`, and
/// pairs of such values reconstruct exact rational ratios without any
/// intermediate reduction.
pub(crate) fn eval_homogeneous(
    coeffs: &[num_bigint::BigInt],
    a: &num_bigint::BigInt,
    b: &num_bigint::BigInt,
) -> num_bigint::BigInt {
    use num_traits::Zero as _;
    let mut acc = num_bigint::BigInt::zero();
    let mut b_pow = num_bigint::BigInt::one();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if k == coeffs.len() - 1 {
            acc = c.clone();
        } else {
            acc = acc * a + c * &b_pow;
        }
        if k > 0 {
            b_pow *= b;
        }
    }
    acc
}

/// Resultant of two nonzero polynomials as the determinant of their
/// Sylvester matrix.
pub fn sylvester_resultant(f: &Poly, g: &Poly) -> Rat {
    let df = f.degree().expect("resultant of the zero polynomial");
    let dg = g.degree().expect("resultant of the zero polynomial");
    let n = df + dg;
    if n == 0 {
        return Rat::one();
    }
    let mut m = RatMatrix::zeros(n, n);
    for row in 0..dg {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            m.set(row, row + k, c.clone());
        }
    }
    for row in 0..df {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            m.set(dg + row, row + k, c.clone());
        }
    }
    m.determinant()
}

/// Exact interpolation through distinct points, Newton form.
pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
    let n = points.len();
    let xs: Vec<&Rat> = points.iter().map(|(x, _)| x).collect();
    // Divided differences built in place.
    let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = xs[i] - xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut result = Poly::zero();
    let mut basis = Poly::one();
    for (i, c) in dd.iter().enumerate() {
        result = &result + &(&basis * &Poly::constant(c.clone()));
        if i + 1 < n {
            let factor = Poly::from_coeffs(vec![-xs[i].clone(), Rat::one()]);
            basis = &basis * &factor;
        }
    }
    result
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", mag)?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
