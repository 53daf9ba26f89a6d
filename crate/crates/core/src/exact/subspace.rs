//! Canonical subspace bases and exact membership solving.

use alloc::vec::Vec;
use core::fmt;

use super::{ExactMatrix, ExactVector};
use crate::error::{Error, Result};

/// A subspace of `ℚ(i)ⁿ`, stored as the unique reduced row-echelon basis
/// of its span.
///
/// Canonical form makes comparison trivial: two `SubspaceBasis` values span
/// the same subspace iff they are entry-wise equal, which is what the
/// derived `PartialEq` checks.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: Vec<ExactVector>,
}

impl SubspaceBasis {
    /// Canonical basis of the span of `vectors` (zero vectors in the input
    /// are fine; they simply contribute nothing). Panics if a vector does
    /// not live in the stated ambient dimension.
    pub fn from_spanning(ambient_dim: usize, vectors: &[ExactVector]) -> Self {
        super::check_dim(ambient_dim);
        for v in vectors {
            assert_eq!(v.dim(), ambient_dim, "spanning vector has the wrong dimension");
        }
        if vectors.is_empty() {
            return SubspaceBasis { ambient_dim, basis: Vec::new() };
        }
        let stacked = ExactMatrix::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect());
        let (rref, pivots) = stacked.rref();
        let basis = (0..pivots.len()).map(|r| rref.row(r)).collect();
        SubspaceBasis { ambient_dim, basis }
    }

    /// Canonical basis of the column space of `m`.
    pub fn column_space_of(m: &ExactMatrix) -> Self {
        let cols: Vec<ExactVector> = (0..m.cols()).map(|c| m.col(c)).collect();
        Self::from_spanning(m.rows(), &cols)
    }

    /// The zero subspace of the given ambient dimension.
    pub fn trivial(ambient_dim: usize) -> Self {
        Self::from_spanning(ambient_dim, &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ExactVector] {
        &self.basis
    }

    /// True iff `v` is an exact linear combination of the basis vectors.
    /// Scale-invariant in `v`. The zero vector is rejected: callers ask
    /// this question about states, and states are nonzero.
    pub fn contains(&self, v: &ExactVector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.dim() });
        }
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.reduce(v).is_zero())
    }

    /// Remainder of `v` after subtracting its projection onto the pivot
    /// coordinates of the basis. Zero iff `v` lies in the span.
    fn reduce(&self, v: &ExactVector) -> ExactVector {
        let mut rem = v.clone();
        for b in &self.basis {
            // each RREF basis row has a leading 1 in a column where all
            // other rows are 0
            let pivot = b
                .iter()
                .position(|e| !e.is_zero())
                .expect("basis rows are nonzero");
            let coeff = rem.get(pivot).clone();
            if !coeff.is_zero() {
                rem = rem.sub(&b.scale(&coeff));
            }
        }
        rem
    }
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, b) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}} in dim {}", self.ambient_dim)
    }
}
