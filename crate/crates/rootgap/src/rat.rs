//! The exact scalar type and its support routines.
//!
//! Everything in this crate computes over arbitrary-precision rationals;
//! no floating point enters any computation path. Floats appear only in
//! display strings, which are decorative.
//!
//! Besides constructors and parsing, this module provides the two
//! precision-control primitives the iteration engines rely on:
//!
//! * directed rounding to a bounded denominator (best rational
//!   approximation from below or above, via continued fractions), used to
//!   keep iterate bit-length from growing geometrically;
//! * directed rational square-root bounds (an upper or lower rational
//!   enclosure of an irrational root, with certified relative precision),
//!   used wherever a squared iterate has to be converted back to a length.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by the underlying representation).
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `2^bits` as a rational; `bits` may be negative.
pub fn pow2(bits: i64) -> Rat {
    let mag = BigInt::one() << bits.unsigned_abs() as usize;
    if bits >= 0 {
        Rat::from_integer(mag)
    } else {
        Rat::new(BigInt::one(), mag)
    }
}

/// Denominator bound `2^bits` for the capped-rounding helpers.
pub fn denom_cap(bits: u32) -> BigUint {
    BigUint::one() << bits as usize
}

/// Lossless `num/den` form, denominator always written out (`-4/1`).
pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Display-only decimal approximation; never fed back into computation.
pub fn decimal_str(x: &Rat) -> String {
    match x.to_f64() {
        Some(f) if f.is_finite() => format!("{f}"),
        _ => "?".to_string(),
    }
}

/// Error from [`parse_rat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses an exact rational from `123`, `-4/7`, `0.25` or `1e-9` style
/// input. Decimal and scientific forms are converted exactly (powers of
/// ten), never through a float.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatError("empty string".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| ParseRatError(s.into()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| ParseRatError(s.into()))?;
        if d.is_zero() {
            return Err(ParseRatError(format!("zero denominator in `{s}`")));
        }
        return Ok(Rat::new(n, d));
    }
    // [sign] digits [. digits] [e [sign] digits]
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| ParseRatError(s.into()))?;
            (m, exp)
        }
        None => (s, 0i64),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRatError(s.into()));
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let n = BigInt::from_str(&digits).map_err(|_| ParseRatError(s.into()))?;
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    Ok(if shift >= 0 {
        Rat::from_integer(n * ten.pow(shift as u32))
    } else {
        Rat::new(n, ten.pow((-shift) as u32))
    })
}

/// Nearest integer to `x` (ties round up).
pub fn round_to_nearest_int(x: &Rat) -> BigInt {
    (x + Rat::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// The two best rational approximations with denominator `<= cap` that
/// straddle `x`; returns `(below, above)`. When `x` itself qualifies both
/// entries equal `x`.
fn straddle_with_denom(x: &Rat, cap: &BigUint) -> (Rat, Rat) {
    assert!(!cap.is_zero(), "denominator cap must be positive");
    let cap = BigInt::from(cap.clone());
    if *x.denom() <= cap {
        return (x.clone(), x.clone());
    }
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut n = x.numer().clone();
    let mut d = x.denom().clone();
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if q2 > cap {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let r = n - &a * &d;
        n = std::mem::replace(&mut d, r);
        // d cannot reach zero here: that would mean x has denominator q1 <= cap.
        debug_assert!(!d.is_zero());
    }
    let k = (&cap - &q0).div_floor(&q1);
    let semi = Rat::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let conv = Rat::new(p1, q1);
    if semi <= conv {
        (semi, conv)
    } else {
        (conv, semi)
    }
}

/// Largest rational `<= x` with denominator `<= cap`.
pub fn round_down_with_denom(x: &Rat, cap: &BigUint) -> Rat {
    straddle_with_denom(x, cap).0
}

/// Smallest rational `>= x` with denominator `<= cap`.
pub fn round_up_with_denom(x: &Rat, cap: &BigUint) -> Rat {
    straddle_with_denom(x, cap).1
}

/// Error for square roots of negative inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeRadicand;

impl fmt::Display for NegativeRadicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "square root of a negative rational")
    }
}

impl std::error::Error for NegativeRadicand {}

/// Rational bracket `[lo, hi]` of `sqrt(x)` with `hi^2 - x <= rel*x` and
/// `x - lo^2 <= rel*x`. Exact squares collapse to a point.
///
/// Uses the identity `sqrt(n/d) = sqrt(n*d)/d` and an integer square root
/// on `4^k * n * d`, bumping `k` until the certified check passes.
pub fn sqrt_bracket(x: &Rat, rel_prec: &Rat) -> Result<(Rat, Rat), NegativeRadicand> {
    if x.is_negative() {
        return Err(NegativeRadicand);
    }
    if x.is_zero() {
        return Ok((Rat::zero(), Rat::zero()));
    }
    assert!(rel_prec.is_positive(), "relative precision must be positive");
    let n = x.numer().to_biguint().expect("checked nonnegative");
    let d = x.denom().to_biguint().expect("denominator positive");
    let nd = &n * &d;
    let root = nd.sqrt();
    if &root * &root == nd {
        let exact = Rat::new(BigInt::from(root), BigInt::from(d));
        return Ok((exact.clone(), exact));
    }
    // Initial scale estimate from bit lengths: want 2^k * sqrt(n*d) >~ 2/rel.
    let inv_rel = rel_prec.recip();
    let rel_bits = (inv_rel.numer().bits() as i64 - inv_rel.denom().bits() as i64).max(0);
    let mut k = (rel_bits + 2 - (nd.bits() as i64 - 1) / 2).max(0) as u32;
    let tol = rel_prec * x;
    loop {
        let scaled = &nd << (2 * k as usize);
        let s = scaled.sqrt();
        let den = BigInt::from(&d << (k as usize));
        let lo = Rat::new(BigInt::from(s.clone()), den.clone());
        let hi = Rat::new(BigInt::from(s + BigUint::one()), den);
        if &(&hi * &hi) - x <= tol && x - &(&lo * &lo) <= tol {
            return Ok((lo, hi));
        }
        k += 1;
    }
}

/// Rational upper bound of `sqrt(x)`: `u >= sqrt(x)` with `u^2 - x <= rel*x`.
pub fn sqrt_upper(x: &Rat, rel_prec: &Rat) -> Result<Rat, NegativeRadicand> {
    sqrt_bracket(x, rel_prec).map(|(_, hi)| hi)
}

/// Rational lower bound of `sqrt(x)`: `l <= sqrt(x)` with `x - l^2 <= rel*x`.
pub fn sqrt_lower(x: &Rat, rel_prec: &Rat) -> Result<Rat, NegativeRadicand> {
    sqrt_bracket(x, rel_prec).map(|(lo, _)| lo)
}
