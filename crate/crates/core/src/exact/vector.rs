//! Dense vectors over the Gaussian rationals.

use alloc::vec::Vec;
use core::fmt;

use super::{check_dim, ExactMatrix, Scalar};
use crate::error::{Error, Result};

/// A dense column vector over [`Scalar`] with a positive dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactVector {
    entries: Vec<Scalar>,
}

impl ExactVector {
    /// Panics if `entries` is empty or longer than [`super::MAX_DIM`].
    pub fn new(entries: Vec<Scalar>) -> Self {
        check_dim(entries.len());
        ExactVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new((0..dim).map(|_| Scalar::zero()).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        ExactVector { entries: self.entries.iter().map(|e| e * factor).collect() }
    }

    pub fn add(&self, rhs: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), rhs.dim(), "vector addition dimension mismatch");
        ExactVector {
            entries: self.iter().zip(rhs.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), rhs.dim(), "vector subtraction dimension mismatch");
        ExactVector {
            entries: self.iter().zip(rhs.iter()).map(|(a, b)| a - b).collect(),
        }
    }

    /// `⟨self|rhs⟩ = Σ conj(selfᵢ)·rhsᵢ`, conjugate-linear in `self`.
    pub fn inner_product(&self, rhs: &ExactVector) -> Result<Scalar> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: rhs.dim() });
        }
        Ok(self.iter().zip(rhs.iter()).map(|(a, b)| &a.conj() * b).sum())
    }

    /// `⟨self|self⟩`, guaranteed real and positive for nonzero vectors.
    pub fn norm_sqr(&self) -> Scalar {
        self.inner_product(self).expect("same vector, same dimension")
    }

    /// Rank-≤1 matrix with entry `(i, j) = selfᵢ · conj(rhsⱼ)`.
    pub fn outer_product(&self, rhs: &ExactVector) -> ExactMatrix {
        ExactMatrix::from_fn(self.dim(), rhs.dim(), |i, j| {
            self.get(i) * &rhs.get(j).conj()
        })
    }

    /// Kronecker product of two vectors (as single-column matrices).
    pub fn kron(&self, rhs: &ExactVector) -> ExactVector {
        let mut entries = Vec::with_capacity(self.dim() * rhs.dim());
        for a in self.iter() {
            for b in rhs.iter() {
                entries.push(a * b);
            }
        }
        ExactVector::new(entries)
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
