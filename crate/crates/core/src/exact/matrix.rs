//! Dense matrices over the Gaussian rationals and exact Gauss–Jordan
//! elimination.

use alloc::vec::Vec;
use core::fmt;

use super::{check_dim, ExactVector, Scalar};

/// A dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    entries: Vec<Scalar>,
    rows: usize,
    cols: usize,
}

impl ExactMatrix {
    /// Panics if `entries.len() != rows * cols` or a dimension is zero or
    /// above [`super::MAX_DIM`].
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        check_dim(rows);
        check_dim(cols);
        assert_eq!(entries.len(), rows * cols, "matrix entries have the wrong length");
        ExactMatrix { entries, rows, cols }
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        assert!(nrows > 0, "matrix needs at least one row");
        let ncols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> ExactVector {
        ExactVector::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|r| self.at(r, c).clone()).collect())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix addition shape mismatch");
        ExactMatrix {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix subtraction shape mismatch");
        ExactMatrix {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn scale(&self, factor: &Scalar) -> ExactMatrix {
        ExactMatrix {
            entries: self.entries.iter().map(|e| e * factor).collect(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        ExactMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| self.at(r, k) * rhs.at(k, c)).sum()
        })
    }

    pub fn mul_vec(&self, v: &ExactVector) -> ExactVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        ExactVector::new(
            (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.at(r, c) * v.get(c)).sum())
                .collect(),
        )
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|k| self.at(k, k).clone()).sum()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self) == *self
    }

    /// Kronecker product; dimensions multiply.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.at(r / rhs.rows, c / rhs.cols) * rhs.at(r % rhs.rows, c % rhs.cols)
        })
    }

    /// Exact Gauss–Jordan elimination to the unique reduced row-echelon
    /// form. Returns the RREF and the pivot column indices. No pivoting
    /// heuristics are needed: arithmetic is exact, so any nonzero entry
    /// serves as a pivot.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.at(pivot_row, col).inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                *m.at_mut(pivot_row, c) = m.at(pivot_row, c) * &inv;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        *m.at_mut(r, c) = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Rank via elimination.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
