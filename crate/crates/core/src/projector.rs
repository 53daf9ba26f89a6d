//! Projection operators and the subspace order on their ranges.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactVector, SubspaceBasis};

/// A Hermitian idempotent operator, the algebraic form of a yes/no
/// proposition.
///
/// Both invariants are checked exactly at construction; nothing downstream
/// re-validates. The label is carried for reporting only and never takes
/// part in equality.
#[derive(Clone)]
pub struct Projector {
    matrix: ExactMatrix,
    label: String,
}

impl PartialEq for Projector {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for Projector {}

impl Projector {
    /// Validates that `matrix` is square, Hermitian, and idempotent.
    pub fn try_new(matrix: ExactMatrix, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian { label });
        }
        if !matrix.is_idempotent() {
            return Err(Error::NotIdempotent { label });
        }
        Ok(Projector { matrix, label })
    }

    /// The always-true proposition on a `dim`-dimensional space.
    pub fn identity(dim: usize) -> Self {
        Projector { matrix: ExactMatrix::identity(dim), label: "1".to_string() }
    }

    /// The always-false proposition on a `dim`-dimensional space.
    pub fn zero(dim: usize) -> Self {
        Projector { matrix: ExactMatrix::zeros(dim, dim), label: "0".to_string() }
    }

    /// Rank-1 projector onto the line of `v`: `|v⟩⟨v| / ⟨v|v⟩`.
    ///
    /// Exact and invariant under rescaling of `v`; the normalization is a
    /// rational because `⟨v|v⟩` is. Errors on the zero vector.
    pub fn from_ket(v: &ExactVector, label: impl Into<String>) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = v.norm_sqr();
        let inv = norm.inverse().expect("norm of a nonzero vector is nonzero");
        let matrix = v.outer_product(v).scale(&inv);
        Projector::try_new(matrix, label)
    }

    /// Negation: `1 − P`, the proposition's complement.
    pub fn negate(&self) -> Self {
        let matrix = ExactMatrix::identity(self.dim()).sub(&self.matrix);
        Projector::try_new(matrix, format!("not({})", self.label))
            .expect("complement of a projector is a projector")
    }

    /// Kronecker product, the conjunction of propositions about distinct
    /// subsystems.
    pub fn tensor(&self, rhs: &Projector) -> Self {
        let matrix = self.matrix.kron(&rhs.matrix);
        Projector::try_new(matrix, format!("{}(x){}", self.label, rhs.label))
            .expect("tensor product of projectors is a projector")
    }

    /// Product of two *commuting* projectors, their common refinement.
    /// Non-commuting operands are rejected: their product is not a
    /// projector, and no proposition corresponds to it here.
    pub fn meet(&self, rhs: &Projector) -> Result<Self> {
        let pq = self.matrix.mul(&rhs.matrix);
        let qp = rhs.matrix.mul(&self.matrix);
        if pq != qp {
            return Err(Error::NonCommuting {
                left: self.label.clone(),
                right: rhs.label.clone(),
            });
        }
        Projector::try_new(pq, format!("meet({},{})", self.label, rhs.label))
    }

    /// Canonical basis of the column space. Its rank equals the trace of
    /// the matrix, which is an integer for projectors.
    pub fn range_basis(&self) -> SubspaceBasis {
        SubspaceBasis::column_space_of(&self.matrix)
    }

    /// Canonical basis of the null space, computed as the range of the
    /// negation: `ker(P) = ran(1 − P)`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        self.negate().range_basis()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Replaces the reporting label; the operator itself is unchanged.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() });
        }
        Ok(self.matrix.mul_vec(v))
    }

    /// `v ∈ ran(P)`, decided exactly as `Pv = v`.
    pub fn fixes(&self, v: &ExactVector) -> Result<bool> {
        Ok(self.apply(v)? == *v)
    }

    /// `v ∈ ker(P)`, decided exactly as `Pv = 0`.
    pub fn annihilates(&self, v: &ExactVector) -> Result<bool> {
        Ok(self.apply(v)?.is_zero())
    }
}

impl fmt::Debug for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Projector `{}` on dim {}", self.label, self.dim())
    }
}

/// How two subspaces of the same ambient space relate under inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceRelation {
    Equal,
    ProperSubset,
    ProperSuperset,
    Incomparable,
}

impl SubspaceRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            SubspaceRelation::Equal => "equal",
            SubspaceRelation::ProperSubset => "proper subset",
            SubspaceRelation::ProperSuperset => "proper superset",
            SubspaceRelation::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for SubspaceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Inclusion order between `s` and `t`, decided by membership of each
/// basis vector of one side in the other.
pub fn compare(s: &SubspaceBasis, t: &SubspaceBasis) -> Result<SubspaceRelation> {
    if s.ambient_dim() != t.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: t.ambient_dim(),
        });
    }
    fn includes(outer: &SubspaceBasis, inner: &SubspaceBasis) -> Result<bool> {
        for v in inner.basis() {
            if !outer.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    Ok(match (includes(t, s)?, includes(s, t)?) {
        (true, true) => SubspaceRelation::Equal,
        (true, false) => SubspaceRelation::ProperSubset,
        (false, true) => SubspaceRelation::ProperSuperset,
        (false, false) => SubspaceRelation::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use alloc::vec;

    fn ket(entries: &[i64]) -> ExactVector {
        ExactVector::from_ints(entries)
    }

    fn half_matrix(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).scale(&Scalar::from_ratio(1, 2))
    }

    #[test]
    fn from_ket_basis_vector() {
        let p = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        assert_eq!(*p.matrix(), ExactMatrix::from_int_rows(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn from_ket_normalizes_exactly() {
        let p = Projector::from_ket(&ket(&[1, 1]), "P_D2A").unwrap();
        assert_eq!(*p.matrix(), half_matrix(&[&[1, 1], &[1, 1]]));
        let q = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        assert_eq!(*q.matrix(), half_matrix(&[&[1, -1], &[-1, 1]]));
        // invariant under rescaling
        assert_eq!(Projector::from_ket(&ket(&[5, -5]), "scaled").unwrap(), q);
    }

    #[test]
    fn from_ket_rejects_zero() {
        assert_eq!(Projector::from_ket(&ExactVector::zeros(3), "z"), Err(Error::ZeroVector));
    }

    #[test]
    fn negate_swaps_basis_projectors() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let p_na = Projector::from_ket(&ket(&[0, 1]), "P_NA").unwrap();
        assert_eq!(p_oa.negate(), p_na);
        assert_eq!(p_oa.negate().negate(), p_oa);
    }

    #[test]
    fn negate_identity_is_zero() {
        assert_eq!(Projector::identity(3).negate(), Projector::zero(3));
    }

    #[test]
    fn negate_of_tensor_projector() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let p_o = p_oa.tensor(&p_oa);
        let expected = ExactMatrix::from_int_rows(&[
            &[0, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(*p_o.negate().matrix(), expected);
    }

    #[test]
    fn tensor_matches_componentwise_kron() {
        let p_d2a = Projector::from_ket(&ket(&[1, 1]), "P_D2A").unwrap();
        let p_d2 = p_d2a.tensor(&p_d2a);
        let quarter = Scalar::from_ratio(1, 4);
        assert_eq!(*p_d2.matrix(), ExactMatrix::from_fn(4, 4, |_, _| quarter.clone()));

        let p_d1a = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        let p_d1 = p_d1a.tensor(&p_d1a);
        let signs = ExactMatrix::from_int_rows(&[
            &[1, -1, -1, 1],
            &[-1, 1, 1, -1],
            &[-1, 1, 1, -1],
            &[1, -1, -1, 1],
        ]);
        assert_eq!(*p_d1.matrix(), signs.scale(&quarter));
    }

    #[test]
    fn range_and_kernel_bases() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let p_o = p_oa.tensor(&p_oa);
        let ran = p_o.range_basis();
        assert_eq!(ran.basis(), &[ket(&[1, 0, 0, 0])]);
        let ker = p_o.kernel_basis();
        assert_eq!(
            ker.basis(),
            &[ket(&[0, 1, 0, 0]), ket(&[0, 0, 1, 0]), ket(&[0, 0, 0, 1])]
        );

        let p_d1a = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        let p_d1 = p_d1a.tensor(&p_d1a);
        assert_eq!(p_d1.range_basis().basis(), &[ket(&[1, -1, -1, 1])]);
        assert_eq!(
            p_d1.kernel_basis().basis(),
            &[ket(&[1, 0, 0, -1]), ket(&[0, 1, 0, 1]), ket(&[0, 0, 1, 1])]
        );

        let p_d2a = Projector::from_ket(&ket(&[1, 1]), "P_D2A").unwrap();
        let p_d2 = p_d2a.tensor(&p_d2a);
        assert_eq!(p_d2.range_basis().basis(), &[ket(&[1, 1, 1, 1])]);

        assert_eq!(Projector::identity(3).kernel_basis().rank(), 0);
    }

    #[test]
    fn rank_counts() {
        let p_d1a = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        let p_d1 = p_d1a.tensor(&p_d1a);
        assert_eq!(p_d1.rank(), 1);
        assert_eq!(p_d1.kernel_basis().rank(), 3);
        assert_eq!(p_d1.matrix().trace(), Scalar::one());
    }

    #[test]
    fn validation_rejects_non_projectors() {
        let not_idem = ExactMatrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            Projector::try_new(not_idem, "j"),
            Err(Error::NotIdempotent { .. })
        ));
        let not_herm = ExactMatrix::new(
            2,
            2,
            vec![Scalar::one(), Scalar::i(), Scalar::i(), Scalar::zero()],
        );
        assert!(matches!(
            Projector::try_new(not_herm, "h"),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn meet_of_commuting_projectors() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let id2 = Projector::identity(2);
        assert_eq!(p_oa.meet(&id2).unwrap(), p_oa);
        assert_eq!(p_oa.meet(&p_oa.negate()).unwrap(), Projector::zero(2));
    }

    #[test]
    fn meet_of_non_commuting_projectors_is_rejected() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let p_d1a = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        assert!(matches!(p_oa.meet(&p_d1a), Err(Error::NonCommuting { .. })));
    }

    #[test]
    fn compare_relations() {
        let p_oa = Projector::from_ket(&ket(&[1, 0]), "P_OA").unwrap();
        let p_o = p_oa.tensor(&p_oa);
        let p_d1a = Projector::from_ket(&ket(&[1, -1]), "P_D1A").unwrap();
        let p_d1 = p_d1a.tensor(&p_d1a);

        let ker_o = p_o.kernel_basis();
        assert_eq!(compare(&ker_o, &p_d1.range_basis()).unwrap(), SubspaceRelation::Incomparable);
        assert_eq!(compare(&ker_o, &p_d1.kernel_basis()).unwrap(), SubspaceRelation::Incomparable);
        assert_eq!(compare(&ker_o, &ker_o).unwrap(), SubspaceRelation::Equal);

        let p_d2a = Projector::from_ket(&ket(&[1, 1]), "P_D2A").unwrap();
        let p_d2 = p_d2a.tensor(&p_d2a);
        assert_eq!(
            compare(&p_d1.range_basis(), &p_d2.range_basis()).unwrap(),
            SubspaceRelation::Incomparable
        );

        // a line inside the full space
        let full = Projector::identity(4).range_basis();
        assert_eq!(compare(&p_d1.range_basis(), &full).unwrap(), SubspaceRelation::ProperSubset);
        assert_eq!(compare(&full, &p_d1.range_basis()).unwrap(), SubspaceRelation::ProperSuperset);
    }

    #[test]
    fn compare_requires_same_ambient_dim() {
        let a = Projector::identity(2).range_basis();
        let b = Projector::identity(3).range_basis();
        assert!(matches!(compare(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = Projector::from_ket(&ket(&[1, 0]), "one name").unwrap();
        let b = Projector::from_ket(&ket(&[1, 0]), "another").unwrap();
        assert_eq!(a, b);
    }
}
