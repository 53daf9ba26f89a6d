//! The four valuation engines: bivalent, supervaluationist, many-valued,
//! and weak-valued.
//!
//! All of them agree where a classical answer exists: a state inside the
//! range of a projector makes the proposition true, a state inside the
//! kernel makes it false. They differ in what happens elsewhere:
//!
//! - [`bivaluate`] refuses to answer (an error);
//! - [`supervaluate`] reports an explicit [`TruthValue::Gap`];
//! - [`many_valued`] answers with the Born degree, a rational strictly
//!   between 0 and 1;
//! - [`weak_valued`] answers with the weak value against a post-selected
//!   state, a Gaussian rational that may lie far outside `[0, 1]`.
//!
//! Every valuation is a ratio of inner products, so multiplying a state by
//! any nonzero scalar changes nothing; states stay unnormalized.

use alloc::string::String;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ExactVector, Rational, Scalar};
use crate::projector::Projector;

/// A pure state: a nonzero, unnormalized vector with a reporting label.
#[derive(Clone)]
pub struct State {
    vector: ExactVector,
    label: String,
}

impl State {
    pub fn new(vector: ExactVector, label: impl Into<String>) -> Result<Self> {
        if vector.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(State { vector, label: label.into() })
    }

    pub fn from_ints(entries: &[i64], label: impl Into<String>) -> Result<Self> {
        Self::new(ExactVector::from_ints(entries), label)
    }

    pub fn vector(&self) -> &ExactVector {
        &self.vector
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    /// The same physical state, rescaled by a nonzero factor.
    pub fn scale(&self, factor: &Scalar) -> Result<Self> {
        Self::new(self.vector.scale(factor), self.label.clone())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "State `{}` {}", self.label, self.vector)
    }
}

/// Outcome of evaluating a proposition in a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TruthValue {
    ClassicalTrue,
    ClassicalFalse,
    /// No truth value at all: the state lies in neither the range nor the
    /// kernel. An explicit outcome, not an absent one; downstream reports
    /// display it.
    Gap,
    /// Born degree strictly inside `(0, 1)`; the boundary cases collapse
    /// to the classical values.
    Degree(Rational),
    /// Weak value, unrestricted: any Gaussian rational can appear.
    Weak(Scalar),
}

impl TruthValue {
    /// Wraps a Born degree, collapsing the boundaries so that `Degree`
    /// payloads are always strictly interior.
    pub fn degree(d: Rational) -> Self {
        if d.is_zero() {
            TruthValue::ClassicalFalse
        } else if d.is_one() {
            TruthValue::ClassicalTrue
        } else {
            TruthValue::Degree(d)
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            TruthValue::ClassicalTrue => "true",
            TruthValue::ClassicalFalse => "false",
            TruthValue::Gap => "gap",
            TruthValue::Degree(_) => "degree",
            TruthValue::Weak(_) => "weak",
        }
    }

    /// Payload as an exact string: `1` / `0` for the classical values,
    /// empty for a gap, the rational or Gaussian-rational text otherwise.
    pub fn value_string(&self) -> String {
        match self {
            TruthValue::ClassicalTrue => String::from("1"),
            TruthValue::ClassicalFalse => String::from("0"),
            TruthValue::Gap => String::new(),
            TruthValue::Degree(d) => Scalar::from_rational(d.clone()).to_display_string(),
            TruthValue::Weak(w) => w.to_display_string(),
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::ClassicalTrue => write!(f, "true"),
            TruthValue::ClassicalFalse => write!(f, "false"),
            TruthValue::Gap => write!(f, "gap"),
            TruthValue::Degree(d) => {
                write!(f, "degree({})", Scalar::from_rational(d.clone()))
            }
            TruthValue::Weak(w) => write!(f, "weak({w})"),
        }
    }
}

/// Which valuation to apply; the weak-valued one carries its
/// post-selection state.
#[derive(Debug, Clone)]
pub enum SemanticsKind {
    Bivalent,
    Supervaluationist,
    ManyValued,
    WeakValued(State),
}

fn check_dims(p: &Projector, psi: &State) -> Result<()> {
    if p.dim() != psi.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: psi.dim() });
    }
    Ok(())
}

/// Classical two-valued assignment. Defined only on states inside the
/// range or kernel; anywhere else there is no bivalent truth value and
/// the evaluation fails.
pub fn bivaluate(p: &Projector, psi: &State) -> Result<TruthValue> {
    match supervaluate(p, psi)? {
        TruthValue::Gap => Err(Error::NoBivalentValue {
            projector: p.label().into(),
            state: psi.label().into(),
        }),
        v => Ok(v),
    }
}

/// Partial two-valued assignment: `ClassicalTrue` on the range,
/// `ClassicalFalse` on the kernel, `Gap` everywhere else. Never returns
/// `Degree` or `Weak`.
pub fn supervaluate(p: &Projector, psi: &State) -> Result<TruthValue> {
    check_dims(p, psi)?;
    let image = p.apply(psi.vector())?;
    if image == *psi.vector() {
        Ok(TruthValue::ClassicalTrue)
    } else if image.is_zero() {
        Ok(TruthValue::ClassicalFalse)
    } else {
        Ok(TruthValue::Gap)
    }
}

/// `⟨ψ|P|ψ⟩ / ⟨ψ|ψ⟩` as an exact rational in `[0, 1]`.
///
/// The denominator is what lets states stay unnormalized: it cancels any
/// scale factor, so `1/√3`-style normalizations never materialize.
pub fn born_degree(p: &Projector, psi: &State) -> Result<Rational> {
    check_dims(p, psi)?;
    let v = psi.vector();
    let numer = v.inner_product(&p.apply(v)?)?;
    let denom = v.norm_sqr();
    debug_assert!(numer.is_real(), "⟨ψ|P|ψ⟩ is real for Hermitian P");
    let degree = numer.re() / denom.re();
    debug_assert!(!degree.is_negative() && degree <= Rational::one());
    Ok(degree)
}

/// Gapless many-valued assignment: the Born degree, with exact boundary
/// collapse to the classical values. Never returns `Gap`.
pub fn many_valued(p: &Projector, psi: &State) -> Result<TruthValue> {
    Ok(TruthValue::degree(born_degree(p, psi)?))
}

/// `⟨φ|P|ψ⟩ / ⟨φ|ψ⟩` for pre-selected `ψ` and post-selected `φ`.
///
/// Exact, and invariant under independent rescaling of both states.
/// Orthogonal pre- and post-selection leaves the ratio undefined; that is
/// reported as an error, never as a division panic.
pub fn weak_value(p: &Projector, pre: &State, post: &State) -> Result<Scalar> {
    check_dims(p, pre)?;
    check_dims(p, post)?;
    let denom = post.vector().inner_product(pre.vector())?;
    if denom.is_zero() {
        return Err(Error::UndefinedWeakValue {
            pre: pre.label().into(),
            post: post.label().into(),
        });
    }
    let numer = post.vector().inner_product(&p.apply(pre.vector())?)?;
    Ok(&numer / &denom)
}

/// Weak-valued assignment. On range/kernel states the classical
/// bivaluation takes precedence (the ratio would agree anyway); elsewhere
/// the result is `Weak(⟨φ|P|ψ⟩ / ⟨φ|ψ⟩)`.
pub fn weak_valued(p: &Projector, pre: &State, post: &State) -> Result<TruthValue> {
    // an admissible post-selection is required even on the classical
    // branch; the semantics is undefined for orthogonal pairs
    let ratio = weak_value(p, pre, post)?;
    match supervaluate(p, pre)? {
        TruthValue::Gap => Ok(TruthValue::Weak(ratio)),
        classical => Ok(classical),
    }
}

/// Checks the bridge between the partial semantics and the Born degree:
/// true iff (`ClassicalTrue` ⟺ degree 1) and (`ClassicalFalse` ⟺ degree 0)
/// both hold, which also forces (`Gap` ⟺ degree strictly interior).
pub fn probability_bridge_check(p: &Projector, psi: &State) -> Result<bool> {
    let sv = supervaluate(p, psi)?;
    let degree = born_degree(p, psi)?;
    let true_iff_one =
        (sv == TruthValue::ClassicalTrue) == degree.is_one();
    let false_iff_zero =
        (sv == TruthValue::ClassicalFalse) == degree.is_zero();
    Ok(true_iff_one && false_iff_zero)
}

/// Dispatch on a [`SemanticsKind`]; this is the single entry point the
/// DSL interpreter uses.
pub fn evaluate(kind: &SemanticsKind, p: &Projector, psi: &State) -> Result<TruthValue> {
    match kind {
        SemanticsKind::Bivalent => bivaluate(p, psi),
        SemanticsKind::Supervaluationist => supervaluate(p, psi),
        SemanticsKind::ManyValued => many_valued(p, psi),
        SemanticsKind::WeakValued(post) => weak_valued(p, psi, post),
    }
}
