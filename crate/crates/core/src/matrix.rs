//! Dense square integer matrices and the exact kernels the rest of the crate
//! leans on: fraction-free (Bareiss) determinants and rational rank.
//!
//! Orders stay small (a few hundred at most), so a dense row-major `Vec` of
//! `BigInt` is the right representation; no sparsity games.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{BigInt, Rational};
use crate::error::{Error, Result};

/// Dense square matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    /// Builds a matrix from rows of machine integers; rows must be square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let order = rows.len();
        let mut m = IntMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), order, "rows must form a square matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    /// The combinatorial Laplacian of the simple graph with the given edges.
    pub fn laplacian_from_edges(vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = IntMatrix::zeros(vertices);
        for &(u, v) in edges {
            assert!(u != v && u < vertices && v < vertices, "invalid edge ({u},{v})");
            m.entries[u * vertices + v] -= 1;
            m.entries[v * vertices + u] -= 1;
            m.entries[u * vertices + u] += 1;
            m.entries[v * vertices + v] += 1;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.order + j] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        (0..self.order).map(|j| self.get(i, j)).sum()
    }

    /// Entrywise sum; orders must match.
    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.check_order(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    /// Entrywise difference; orders must match.
    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.check_order(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    fn check_order(&self, rhs: &IntMatrix) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::DimensionMismatch(self.order, rhs.order));
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Exact matrix product.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.check_order(rhs)?;
        let n = self.order;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The `k×k` corner made of the first `k` rows and columns.
    pub fn leading_principal(&self, k: usize) -> IntMatrix {
        assert!(k <= self.order);
        self.select(&(0..k).collect::<Vec<_>>())
    }

    /// The `k×k` corner made of the last `k` rows and columns.
    pub fn trailing_principal(&self, k: usize) -> IntMatrix {
        assert!(k <= self.order);
        self.select(&((self.order - k)..self.order).collect::<Vec<_>>())
    }

    /// Deletes one row/column pair.
    pub fn delete_row_col(&self, i: usize) -> IntMatrix {
        assert!(i < self.order, "index out of range");
        let keep: Vec<usize> = (0..self.order).filter(|&r| r != i).collect();
        self.select(&keep)
    }

    /// Reverses the row/column order (conjugation by the flip permutation).
    pub fn reversed(&self) -> IntMatrix {
        let idx: Vec<usize> = (0..self.order).rev().collect();
        self.select(&idx)
    }

    fn select(&self, idx: &[usize]) -> IntMatrix {
        let k = idx.len();
        let mut out = IntMatrix::zeros(k);
        for (i, &ri) in idx.iter().enumerate() {
            for (j, &cj) in idx.iter().enumerate() {
                out.entries[i * k + j] = self.get(ri, cj).clone();
            }
        }
        out
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// Every division is exact over `Z`, so there is no rounding anywhere.
    /// Singular matrices return zero.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| -> BigInt { m[i * n + j].clone() };
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &pivot * &m[i * n + j] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = at(&m, n - 1, n - 1);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Exact rank over the rationals (Gaussian elimination with pivoting).
    pub fn rank(&self) -> usize {
        let n = self.order;
        let mut m: Vec<Rational> = self
            .entries
            .iter()
            .map(|e| Rational::from_integer(e.clone()))
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            let pivot_row = match (row..n).find(|&r| !m[r * n + col].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            for j in 0..n {
                m.swap(row * n + j, pivot_row * n + j);
            }
            let pivot = m[row * n + col].clone();
            for r in row + 1..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = &m[r * n + col] / &pivot;
                for j in col..n {
                    let sub = &factor * &m[row * n + j];
                    m[r * n + j] = &m[r * n + j] - &sub;
                }
            }
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }

    /// Entries as `f64`, row-major; the bridge to the numeric eigensolver.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| bigint_to_f64(self.get(i, j)))
                    .collect()
            })
            .collect()
    }

    /// Rows as `i64` for serialization; panics when an entry does not fit.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let v = self.get(i, j);
                        i64::try_from(v).unwrap_or_else(|_| panic!("entry {v} exceeds i64"))
                    })
                    .collect()
            })
            .collect()
    }
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    let mut value = 0.0f64;
    for digit in v.magnitude().to_u64_digits().iter().rev() {
        value = value * 1.8446744073709552e19 + *digit as f64;
    }
    if v.is_negative() {
        -value
    } else {
        value
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            for j in 0..self.order {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
