//! Dense matrices over exact rationals.
//!
//! Determinants clear denominators and run fraction-free (Bareiss)
//! elimination over integers, so every intermediate value is an exact
//! minor; linear solves use plain exact Gaussian elimination. Sizes here
//! are desk scale, so no pivoting strategy beyond "first nonzero" is
//! needed for correctness or speed.

use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Errors from matrix construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Rows of differing lengths were supplied.
    RaggedRows,
    /// An operation required a square matrix.
    NotSquare,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::RaggedRows => write!(f, "rows have differing lengths"),
            MatrixError::NotSquare => write!(f, "matrix is not square"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::RaggedRows);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a square matrix from a generator over (row, col).
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = &*v * c;
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v = &*v + w;
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Exact determinant. Denominators are cleared once, then the integer
    /// matrix goes through fraction-free elimination with row pivoting.
    pub fn determinant(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut scale = BigInt::one();
        for v in &self.data {
            scale = scale.lcm(v.denom());
        }
        let ints: Vec<BigInt> = self
            .data
            .iter()
            .map(|v| v.numer() * (&scale / v.denom()))
            .collect();
        let det = bareiss_int_determinant(ints, n);
        Rat::new(det, scale.pow(n as u32))
    }

    /// Exact solve of `self * x = b`; `None` when singular.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert!(self.is_square(), "solve requires a square matrix");
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                rhs.swap(col, pivot_row);
            }
            let pivot = a[col * n + col].clone();
            for r in (col + 1)..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &pivot;
                for j in col..n {
                    let sub = &factor * &a[col * n + j];
                    a[r * n + j] = &a[r * n + j] - &sub;
                }
                let sub = &factor * &rhs[col];
                rhs[r] = &rhs[r] - &sub;
            }
        }
        let mut x = vec![Rat::zero(); n];
        for row in (0..n).rev() {
            let mut acc = rhs[row].clone();
            for j in (row + 1)..n {
                acc -= &a[row * n + j] * &x[j];
            }
            x[row] = acc / &a[row * n + row];
        }
        Some(x)
    }

    /// `self` raised to an integer power by repeated multiplication.
    pub fn pow(&self, k: usize) -> RatMatrix {
        assert!(self.is_square());
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// One-step fraction-free elimination; every intermediate entry is an
/// exact minor of the input, so divisions are exact.
fn bareiss_int_determinant(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k].is_zero() {
            let Some(swap_row) = ((k + 1)..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, swap_row * n + j);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free division left a remainder");
                a[i * n + j] = q;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> RatMatrix {
        RatMatrix::from_rows(vec![vec![rat(a), rat(b)], vec![rat(c), rat(d)]]).unwrap()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m2(1, 2, 3, 4).determinant(), rat(-2));
        assert_eq!(m2(2, 0, 0, 2).determinant(), rat(4));
        assert_eq!(m2(1, 2, 2, 4).determinant(), rat(0));
    }

    #[test]
    fn determinant_with_zero_pivot_needs_swap() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        assert_eq!(m.determinant(), rat(-1));
    }

    #[test]
    fn determinant_rational_entries() {
        let m = RatMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 5)],
        ])
        .unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(m.determinant(), ratio(1, 60));
    }

    #[test]
    fn determinant_4x4_vandermonde() {
        // Vandermonde on 1,2,3,4: product of differences = 12.
        let pts = [1i64, 2, 3, 4];
        let m = RatMatrix::from_fn(4, |i, j| rat(pts[i].pow(j as u32)));
        assert_eq!(m.determinant(), rat(12));
    }

    #[test]
    fn solve_and_residual() {
        let m = m2(3, 4, 4, 6);
        let x = m.solve(&[rat(1), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(1), ratio(-1, 2)]);
        assert!(m2(1, 2, 2, 4).solve(&[rat(1), rat(1)]).is_none());
    }

    #[test]
    fn powers_and_trace() {
        let m = m2(0, 1, 1, 0);
        assert_eq!(m.pow(2), RatMatrix::identity(2));
        assert_eq!(m.pow(3), m);
        assert_eq!(m.pow(0).trace(), rat(2));
    }

    #[test]
    fn symmetry_check() {
        assert!(m2(1, 2, 2, 1).is_symmetric());
        assert!(!m2(1, 2, 3, 1).is_symmetric());
    }
}
