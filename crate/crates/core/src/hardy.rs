//! The two-interferometer coincidence scenario and its report.
//!
//! Two particles, A and B, each traverse a Mach-Zehnder interferometer
//! whose overlapping arms intersect. Per particle there are two arm
//! propositions (`O` = overlapping arm, `N` = non-overlapping arm) and two
//! exit detectors (`D1`, `D2`). The joint space is four-dimensional with
//! the product basis ordered
//!
//! ```text
//! (O^A O^B, O^A N^B, N^A O^B, N^A N^B)
//! ```
//!
//! a convention used consistently everywhere, including the DSL scripts.
//!
//! Classically, "both particles took the overlapping arms" (`O`) is false
//! in the prepared state, and the detector coincidence `D1` tracks `O`, so
//! the coincidence should never happen. Its Born degree is nevertheless
//! exactly `1/12`. [`paradox_report`] assembles that contradiction and how
//! each non-classical semantics dissolves it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact::{ExactVector, Rational, Scalar};
use crate::projector::{compare, Projector, SubspaceRelation};
use crate::semantics::{
    born_degree, many_valued, supervaluate, weak_value, weak_valued, State, TruthValue,
};

/// All named projectors and states of the scenario, built exactly.
pub struct HardyScenario {
    /// Arm projectors on one particle (2-dim).
    pub p_oa: Projector,
    pub p_na: Projector,
    pub p_ob: Projector,
    pub p_nb: Projector,
    /// Detector projectors on one particle (2-dim).
    pub p_d1a: Projector,
    pub p_d2a: Projector,
    pub p_d1b: Projector,
    pub p_d2b: Projector,
    /// Joint propositions (4-dim).
    pub p_o: Projector,
    pub p_d1: Projector,
    pub p_d2: Projector,
    /// The prepared state with the both-overlap component removed:
    /// `(0, 1, 1, 1)` up to scale.
    pub psi_not_o: State,
    /// The state conditioned on the double `D1` click:
    /// `(1, −1, −1, 1)` up to scale.
    pub psi_d1: State,
}

/// Constructs the scenario and checks its defining facts exactly:
/// the prepared state lies in `ker(P_O)`, the coincidence state lies in
/// `ran(P_D1)`, and the joint projectors factor over the particles.
pub fn build_scenario() -> HardyScenario {
    let o_ket = ExactVector::from_ints(&[1, 0]);
    let n_ket = ExactVector::from_ints(&[0, 1]);
    let d1_ket = ExactVector::from_ints(&[1, -1]);
    let d2_ket = ExactVector::from_ints(&[1, 1]);

    let p_oa = Projector::from_ket(&o_ket, "P_OA").expect("nonzero ket");
    let p_ob = Projector::from_ket(&o_ket, "P_OB").expect("nonzero ket");
    let p_na = Projector::from_ket(&n_ket, "P_NA").expect("nonzero ket");
    let p_nb = Projector::from_ket(&n_ket, "P_NB").expect("nonzero ket");
    let p_d1a = Projector::from_ket(&d1_ket, "P_D1A").expect("nonzero ket");
    let p_d1b = Projector::from_ket(&d1_ket, "P_D1B").expect("nonzero ket");
    let p_d2a = Projector::from_ket(&d2_ket, "P_D2A").expect("nonzero ket");
    let p_d2b = Projector::from_ket(&d2_ket, "P_D2B").expect("nonzero ket");

    let p_o = p_oa.tensor(&p_ob).with_label("P_O");
    let p_d1 = p_d1a.tensor(&p_d1b).with_label("P_D1");
    let p_d2 = p_d2a.tensor(&p_d2b).with_label("P_D2");

    let psi_not_o = State::from_ints(&[0, 1, 1, 1], "psi_notO").expect("nonzero state");
    let psi_d1 = State::new(d1_ket.kron(&d1_ket), "psi_D1").expect("nonzero state");

    assert!(
        p_o.annihilates(psi_not_o.vector()).expect("dims match"),
        "prepared state must lie in ker(P_O)"
    );
    assert!(
        p_d1.fixes(psi_d1.vector()).expect("dims match"),
        "coincidence state must lie in ran(P_D1)"
    );
    assert_eq!(p_o, p_oa.tensor(&p_ob), "P_O factors over the particles");
    assert_eq!(p_d1, p_d1a.tensor(&p_d1b), "P_D1 factors over the particles");

    HardyScenario {
        p_oa,
        p_na,
        p_ob,
        p_nb,
        p_d1a,
        p_d2a,
        p_d1b,
        p_d2b,
        p_o,
        p_d1,
        p_d2,
        psi_not_o,
        psi_d1,
    }
}

/// The pair of subspace comparisons that blocks any classical reading:
/// `ker(P_O)` against `ran(P_D1)` and against `ker(P_D1)`. Both come out
/// [`SubspaceRelation::Incomparable`].
pub fn incomparability_witness(s: &HardyScenario) -> (SubspaceRelation, SubspaceRelation) {
    let ker_o = s.p_o.kernel_basis();
    let vs_range = compare(&ker_o, &s.p_d1.range_basis()).expect("same ambient dimension");
    let vs_kernel = compare(&ker_o, &s.p_d1.kernel_basis()).expect("same ambient dimension");
    (vs_range, vs_kernel)
}

/// Weak values of the four arm-pair projectors `P_x^A ⊗ P_y^B`,
/// pre-selected on `psi_notO` and post-selected on `psi_D1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhichWayTable {
    pub oo: Scalar,
    pub on: Scalar,
    pub no: Scalar,
    pub nn: Scalar,
}

impl WhichWayTable {
    /// Entries in the fixed order OO, ON, NO, NN.
    pub fn entries(&self) -> [(&'static str, &Scalar); 4] {
        [("OO", &self.oo), ("ON", &self.on), ("NO", &self.no), ("NN", &self.nn)]
    }

    /// Sum of the four entries; the arm-pair projectors resolve the
    /// identity, so this is exactly 1.
    pub fn total(&self) -> Scalar {
        let mut sum = self.oo.clone();
        for part in [&self.on, &self.no, &self.nn] {
            sum = &sum + part;
        }
        sum
    }
}

/// Computes the which-way table. The four projectors form an orthogonal
/// resolution of the identity, so the entries sum to exactly 1 even
/// though one of them is negative.
pub fn which_way_table(s: &HardyScenario) -> WhichWayTable {
    let w = |pa: &Projector, pb: &Projector| {
        weak_value(&pa.tensor(pb), &s.psi_not_o, &s.psi_d1)
            .expect("pre and post states are not orthogonal")
    };
    WhichWayTable {
        oo: w(&s.p_oa, &s.p_ob),
        on: w(&s.p_oa, &s.p_nb),
        no: w(&s.p_na, &s.p_ob),
        nn: w(&s.p_na, &s.p_nb),
    }
}

/// The classical inference and its collision with the quantum value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalChain {
    /// Valuation of `O` in the prepared state (false: the state lies in
    /// `ker(P_O)`).
    pub o_valuation: TruthValue,
    /// The setup premise: each dark detector clicks iff the other particle
    /// took its overlapping arm, so `D1` carries the same truth value as
    /// `O`.
    pub d1_tracks_o: bool,
    /// What the two premises force classically: probability of the
    /// coincidence is 0.
    pub classical_conclusion: Rational,
    /// The exact Born degree of the coincidence in the prepared state.
    pub quantum_degree: Rational,
    /// Set iff the classical conclusion disagrees with the quantum value.
    pub contradiction: bool,
}

/// Gap findings plus the incomparability witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupervaluationistSection {
    pub d1_in_psi_not_o: TruthValue,
    pub o_in_psi_d1: TruthValue,
    pub ker_o_vs_ran_d1: SubspaceRelation,
    pub ker_o_vs_ker_d1: SubspaceRelation,
}

/// Born degrees filling the gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManyValuedSection {
    pub d1_in_psi_not_o: TruthValue,
    pub o_in_psi_d1: TruthValue,
}

/// A conditional that fails, together with the computed witness values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonImplication {
    pub antecedent: String,
    pub consequent: String,
    pub witness: String,
    /// Whether the implication holds; both recorded findings are failures.
    pub holds: bool,
}

/// Weak values filling the gaps, and the two broken classical inferences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSection {
    /// `D1` pre-selected on `psi_notO`, post-selected on `psi_D1`.
    pub d1_in_psi_not_o: TruthValue,
    /// `O` pre-selected on `psi_D1`, post-selected on `psi_notO`.
    pub o_in_psi_d1: TruthValue,
    pub non_implications: Vec<NonImplication>,
}

/// Which-way table plus its sum and a scope note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhichWaySection {
    pub table: WhichWayTable,
    pub total: Scalar,
    /// The OO entry restates the weak value of `P_O`; the other three
    /// entries extend the weak-valued semantics to the remaining arm
    /// pairs by direct evaluation.
    pub note: String,
}

/// The complete machine-checkable report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParadoxReport {
    pub classical_chain: ClassicalChain,
    pub supervaluationist_section: SupervaluationistSection,
    pub many_valued_section: ManyValuedSection,
    pub weak_section: WeakSection,
    pub which_way_table: WhichWaySection,
}

/// Evaluates every section of the report from the scenario. All numbers
/// are exact; nothing here is approximated or hard-coded beyond the
/// classical conclusion `0`, which is what the classical premises entail.
pub fn paradox_report(s: &HardyScenario) -> ParadoxReport {
    let o_valuation = supervaluate(&s.p_o, &s.psi_not_o).expect("dims match");
    let quantum_degree = born_degree(&s.p_d1, &s.psi_not_o).expect("dims match");
    let classical_conclusion = Rational::zero();
    let classical_chain = ClassicalChain {
        o_valuation,
        d1_tracks_o: true,
        classical_conclusion: classical_conclusion.clone(),
        quantum_degree: quantum_degree.clone(),
        contradiction: quantum_degree != classical_conclusion,
    };

    let (vs_range, vs_kernel) = incomparability_witness(s);
    let supervaluationist_section = SupervaluationistSection {
        d1_in_psi_not_o: supervaluate(&s.p_d1, &s.psi_not_o).expect("dims match"),
        o_in_psi_d1: supervaluate(&s.p_o, &s.psi_d1).expect("dims match"),
        ker_o_vs_ran_d1: vs_range,
        ker_o_vs_ker_d1: vs_kernel,
    };

    let many_valued_section = ManyValuedSection {
        d1_in_psi_not_o: many_valued(&s.p_d1, &s.psi_not_o).expect("dims match"),
        o_in_psi_d1: many_valued(&s.p_o, &s.psi_d1).expect("dims match"),
    };

    let d1_weak = weak_valued(&s.p_d1, &s.psi_not_o, &s.psi_d1).expect("admissible post");
    let o_weak = weak_valued(&s.p_o, &s.psi_d1, &s.psi_not_o).expect("admissible post");
    let d1_weak_value = match &d1_weak {
        TruthValue::Weak(w) => w.clone(),
        other => Scalar::from_int(i64::from(*other == TruthValue::ClassicalTrue)),
    };
    let o_weak_value = match &o_weak {
        TruthValue::Weak(w) => w.clone(),
        other => Scalar::from_int(i64::from(*other == TruthValue::ClassicalTrue)),
    };
    let non_implications = alloc::vec![
        NonImplication {
            antecedent: String::from("O is false in psi_notO"),
            consequent: String::from("the weak value of D1 in psi_notO is 0"),
            witness: format!("weak value of D1 is {d1_weak_value}"),
            holds: d1_weak_value.is_zero(),
        },
        NonImplication {
            antecedent: String::from("D1 is true in psi_D1"),
            consequent: String::from("the weak value of O in psi_D1 is nonzero"),
            witness: format!("weak value of O is {o_weak_value}"),
            holds: !o_weak_value.is_zero(),
        },
    ];
    let weak_section = WeakSection {
        d1_in_psi_not_o: d1_weak,
        o_in_psi_d1: o_weak,
        non_implications,
    };

    let table = which_way_table(s);
    let total = table.total();
    let which_way_table = WhichWaySection {
        table,
        total,
        note: String::from(
            "entries other than OO extend the weak-valued semantics to the remaining arm pairs",
        ),
    };

    ParadoxReport {
        classical_chain,
        supervaluationist_section,
        many_valued_section,
        weak_section,
        which_way_table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactMatrix;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn scenario_invariants_hold() {
        let s = build_scenario();
        assert!(s.p_o.annihilates(s.psi_not_o.vector()).unwrap());
        assert!(s.p_d1.fixes(s.psi_d1.vector()).unwrap());
        assert_eq!(s.p_o, s.p_oa.tensor(&s.p_ob));
        assert_eq!(s.p_d1, s.p_d1a.tensor(&s.p_d1b));
        assert_eq!(s.psi_not_o.vector(), &ExactVector::from_ints(&[0, 1, 1, 1]));
        assert_eq!(s.psi_d1.vector(), &ExactVector::from_ints(&[1, -1, -1, 1]));
    }

    #[test]
    fn detector_projectors_on_one_particle_are_complementary() {
        let s = build_scenario();
        let sum = s.p_d1a.matrix().add(s.p_d2a.matrix());
        assert_eq!(sum, ExactMatrix::identity(2));
        assert_eq!(s.p_d1a.negate(), s.p_d2a);
    }

    #[test]
    fn witness_is_doubly_incomparable() {
        let s = build_scenario();
        assert_eq!(
            incomparability_witness(&s),
            (SubspaceRelation::Incomparable, SubspaceRelation::Incomparable)
        );
        // self-comparison control
        assert_eq!(
            compare(&s.p_o.kernel_basis(), &s.p_o.kernel_basis()).unwrap(),
            SubspaceRelation::Equal
        );
        assert_eq!(
            compare(&s.p_d1.range_basis(), &s.p_d2.range_basis()).unwrap(),
            SubspaceRelation::Incomparable
        );
    }

    #[test]
    fn which_way_values() {
        let s = build_scenario();
        let t = which_way_table(&s);
        assert_eq!(t.oo, Scalar::zero());
        assert_eq!(t.on, Scalar::one());
        assert_eq!(t.no, Scalar::one());
        assert_eq!(t.nn, Scalar::from_int(-1));
        assert_eq!(t.total(), Scalar::one());
    }

    #[test]
    fn report_reproduces_the_exact_values() {
        let s = build_scenario();
        let r = paradox_report(&s);

        assert_eq!(r.classical_chain.o_valuation, TruthValue::ClassicalFalse);
        assert!(r.classical_chain.d1_tracks_o);
        assert_eq!(r.classical_chain.classical_conclusion, rat(0, 1));
        assert_eq!(r.classical_chain.quantum_degree, rat(1, 12));
        assert!(r.classical_chain.contradiction);

        assert_eq!(r.supervaluationist_section.d1_in_psi_not_o, TruthValue::Gap);
        assert_eq!(r.supervaluationist_section.o_in_psi_d1, TruthValue::Gap);
        assert_eq!(r.supervaluationist_section.ker_o_vs_ran_d1, SubspaceRelation::Incomparable);
        assert_eq!(r.supervaluationist_section.ker_o_vs_ker_d1, SubspaceRelation::Incomparable);

        assert_eq!(r.many_valued_section.d1_in_psi_not_o, TruthValue::Degree(rat(1, 12)));
        assert_eq!(r.many_valued_section.o_in_psi_d1, TruthValue::Degree(rat(1, 4)));

        assert_eq!(r.weak_section.d1_in_psi_not_o, TruthValue::Weak(Scalar::one()));
        assert_eq!(r.weak_section.o_in_psi_d1, TruthValue::Weak(Scalar::zero()));
        assert_eq!(r.weak_section.non_implications.len(), 2);
        assert!(r.weak_section.non_implications.iter().all(|n| !n.holds));

        assert_eq!(r.which_way_table.total, Scalar::one());
    }
}
