//! Exact evaluation of quantum propositions under non-classical semantics.
//!
//! A projection operator on a finite-dimensional Hilbert space stands for a
//! yes/no proposition about a quantum system. This crate evaluates such
//! propositions against pure states under four semantics:
//!
//! - **bivalent**: classical two-valued assignment, defined only when the
//!   state lies in the range or the kernel of the projector;
//! - **supervaluationist**: two-valued but partial, with states in neither
//!   subspace receiving an explicit truth-value *gap*;
//! - **many-valued**: the gap is filled by the Born degree
//!   `⟨ψ|P|ψ⟩ / ⟨ψ|ψ⟩`, an exact rational in `[0, 1]`;
//! - **weak-valued**: the gap is filled by the weak value
//!   `⟨φ|P|ψ⟩ / ⟨φ|ψ⟩` for a pre-selected `ψ` and post-selected `φ`,
//!   which may lie anywhere in the Gaussian rationals.
//!
//! Everything is computed over `ℚ(i)` (complex numbers with rational real
//! and imaginary parts) with arbitrary-precision integers, so results such
//! as `1/12` are exact, never approximate. States are kept unnormalized:
//! every valuation is a ratio in which normalization factors cancel, so
//! irrational factors like `1/√3` never need to be represented.
//!
//! The [`hardy`] module builds the two-particle interferometer scenario in
//! which a classically impossible detector coincidence has Born degree
//! `1/12`, and produces a machine-checkable report of how each semantics
//! treats it. The [`dsl`] module provides a small declarative language for
//! defining kets and projectors and running valuation queries.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dsl;
pub mod error;
pub mod exact;
pub mod hardy;
pub mod projector;
pub mod semantics;

pub use error::Error;
pub use exact::{ExactMatrix, ExactVector, Rational, Scalar, SubspaceBasis, MAX_DIM};
pub use projector::{compare, Projector, SubspaceRelation};
pub use semantics::{SemanticsKind, State, TruthValue};
