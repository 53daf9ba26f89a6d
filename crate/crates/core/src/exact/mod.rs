//! Exact Gaussian-rational arithmetic and dense linear algebra.
//!
//! The single number type of the engine is [`Scalar`], an element of `ℚ(i)`
//! stored as a pair of arbitrary-precision rationals. On top of it sit dense
//! [`ExactVector`]s and [`ExactMatrix`]es, Gauss–Jordan elimination to
//! reduced row-echelon form, and [`SubspaceBasis`], the unique RREF
//! canonical basis of a subspace. Because the basis is canonical, two
//! subspaces are equal iff their bases are entry-wise equal.
//!
//! No operation here ever rounds: addition, multiplication, division by a
//! nonzero element, and conjugation are all closed over `ℚ(i)`.

mod matrix;
mod scalar;
mod subspace;
mod vector;

pub use matrix::ExactMatrix;
pub use scalar::{Rational, Scalar};
pub use subspace::SubspaceBasis;
pub use vector::ExactVector;

/// Largest supported ambient dimension.
///
/// Exact elimination is cubic in the dimension; this cap keeps worst-case
/// runtime on a desktop machine in seconds.
pub const MAX_DIM: usize = 4096;

pub(crate) fn check_dim(dim: usize) -> usize {
    assert!(dim > 0, "dimension must be positive");
    assert!(
        dim <= MAX_DIM,
        "ambient dimension {dim} exceeds the supported maximum {MAX_DIM}"
    );
    dim
}
