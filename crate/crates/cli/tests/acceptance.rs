//! Acceptance suite: one test per criterion, each printing a pass line
//! with the exact values it verified. Everything numeric is asserted with
//! zero tolerance, except the floating-point cross-check in criterion 6,
//! which agrees with the exact values within 1e-12 by construction.

use std::path::Path;
use std::process::Command;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsem_core::dsl;
use qsem_core::hardy::{build_scenario, paradox_report, which_way_table};
use qsem_core::semantics::{
    born_degree, probability_bridge_check, supervaluate, weak_value, State, TruthValue,
};
use qsem_core::{ExactMatrix, ExactVector, Projector, Rational, Scalar, SubspaceRelation};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn workspace_path(rel: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn criterion_1_born_degree_of_coincidence_is_one_twelfth() {
    let s = build_scenario();
    let degree = born_degree(&s.p_d1, &s.psi_not_o).unwrap();
    assert_eq!(degree, rat(1, 12));
    println!("criterion 1 PASS: born_degree(P_D1, psi_notO) = {degree} exactly");
}

#[test]
fn criterion_2_born_degree_of_overlap_is_one_quarter() {
    let s = build_scenario();
    let degree = born_degree(&s.p_o, &s.psi_d1).unwrap();
    assert_eq!(degree, rat(1, 4));
    println!("criterion 2 PASS: born_degree(P_O, psi_D1) = {degree} exactly");
}

#[test]
fn criterion_3_weak_values_are_one_and_zero() {
    let s = build_scenario();
    let w_d1 = weak_value(&s.p_d1, &s.psi_not_o, &s.psi_d1).unwrap();
    let w_o = weak_value(&s.p_o, &s.psi_d1, &s.psi_not_o).unwrap();
    assert_eq!(w_d1, Scalar::one());
    assert_eq!(w_o, Scalar::zero());
    println!("criterion 3 PASS: weak(P_D1) = {w_d1}, weak(P_O) = {w_o} exactly");
}

#[test]
fn criterion_4_supervaluation_outcomes() {
    let s = build_scenario();
    let cases = [
        (&s.p_o, &s.psi_not_o, TruthValue::ClassicalFalse),
        (&s.p_d1, &s.psi_d1, TruthValue::ClassicalTrue),
        (&s.p_d1, &s.psi_not_o, TruthValue::Gap),
        (&s.p_o, &s.psi_d1, TruthValue::Gap),
    ];
    for (p, psi, expected) in cases {
        let got = supervaluate(p, psi).unwrap();
        assert_eq!(got, expected, "{} in {}", p.label(), psi.label());
    }
    println!("criterion 4 PASS: supervaluations are false, true, gap, gap");
}

#[test]
fn criterion_5_incomparability_witness() {
    let s = build_scenario();
    let witness = qsem_core::hardy::incomparability_witness(&s);
    assert_eq!(witness, (SubspaceRelation::Incomparable, SubspaceRelation::Incomparable));
    println!("criterion 5 PASS: ker(P_O) is incomparable with ran(P_D1) and ker(P_D1)");
}

// ---------------------------------------------------------------------
// criterion 6: which-way table, cross-checked by a floating-point oracle
// written against num-complex, sharing nothing with the exact engine
// ---------------------------------------------------------------------

mod float_oracle {
    use super::Complex64;

    pub fn outer_over_norm(v: &[Complex64]) -> Vec<Vec<Complex64>> {
        let norm: Complex64 = v.iter().map(|a| a.conj() * a).sum();
        v.iter()
            .map(|a| v.iter().map(|b| a * b.conj() / norm).collect())
            .collect()
    }

    pub fn kron(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
        let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
        (0..ar * br)
            .map(|r| (0..ac * bc).map(|c| a[r / br][c / bc] * b[r % br][c % bc]).collect())
            .collect()
    }

    pub fn weak(p: &[Vec<Complex64>], pre: &[Complex64], post: &[Complex64]) -> Complex64 {
        let applied: Vec<Complex64> = p
            .iter()
            .map(|row| row.iter().zip(pre).map(|(m, x)| m * x).sum())
            .collect();
        let numer: Complex64 = post.iter().zip(&applied).map(|(a, b)| a.conj() * b).sum();
        let denom: Complex64 = post.iter().zip(pre).map(|(a, b)| a.conj() * b).sum();
        numer / denom
    }
}

#[test]
fn criterion_6_which_way_table_with_float_cross_check() {
    let s = build_scenario();
    let table = which_way_table(&s);
    assert_eq!(table.oo, Scalar::zero());
    assert_eq!(table.on, Scalar::one());
    assert_eq!(table.no, Scalar::one());
    assert_eq!(table.nn, Scalar::from_int(-1));
    assert_eq!(table.total(), Scalar::one());

    // independent float evaluation of the same four weak values
    let c = |x: f64| Complex64::new(x, 0.0);
    let o_ket = [c(1.0), c(0.0)];
    let n_ket = [c(0.0), c(1.0)];
    let p_o = float_oracle::outer_over_norm(&o_ket);
    let p_n = float_oracle::outer_over_norm(&n_ket);
    let pre = [c(0.0), c(1.0), c(1.0), c(1.0)];
    let post = [c(1.0), c(-1.0), c(-1.0), c(1.0)];
    let expected = [
        (&p_o, &p_o, 0.0),
        (&p_o, &p_n, 1.0),
        (&p_n, &p_o, 1.0),
        (&p_n, &p_n, -1.0),
    ];
    let mut float_total = Complex64::zero();
    for (pa, pb, exact) in expected {
        let w = float_oracle::weak(&float_oracle::kron(pa, pb), &pre, &post);
        assert!((w.re - exact).abs() < 1e-12, "float oracle disagrees: {} vs {exact}", w.re);
        assert!(w.im.abs() < 1e-12);
        float_total += w;
    }
    assert!((float_total.re - 1.0).abs() < 1e-12);
    println!(
        "criterion 6 PASS: which-way = {{OO: {}, ON: {}, NO: {}, NN: {}}}, total {}, float oracle within 1e-12",
        table.oo, table.on, table.no, table.nn, table.total()
    );
}

// ---------------------------------------------------------------------
// criterion 7: randomized property suite, ≥1000 cases, dims 2–8
// ---------------------------------------------------------------------

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(random_rational(rng), random_rational(rng))
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> ExactVector {
    ExactVector::new((0..dim).map(|_| random_scalar(rng)).collect())
}

fn random_nonzero_vector(rng: &mut ChaCha8Rng, dim: usize) -> ExactVector {
    loop {
        let v = random_vector(rng, dim);
        if !v.is_zero() {
            return v;
        }
    }
}

fn random_nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Rescale to a primitive Gaussian-integer vector; every property in
/// this suite is scale-invariant, and small entries keep the exact
/// arithmetic fast.
fn primitive(v: &ExactVector) -> ExactVector {
    let mut lcm = BigInt::one();
    for s in v.iter() {
        lcm = lcm.lcm(s.re().denom());
        lcm = lcm.lcm(s.im().denom());
    }
    let mut gcd = BigInt::zero();
    for s in v.iter() {
        gcd = gcd.gcd(&(s.re().numer() * &lcm / s.re().denom()));
        gcd = gcd.gcd(&(s.im().numer() * &lcm / s.im().denom()));
    }
    if gcd.is_zero() {
        return v.clone();
    }
    v.scale(&Scalar::from_rational(Rational::new(lcm, gcd)))
}

/// Exact Gram–Schmidt over the seeds, padded with the standard basis to a
/// full orthogonal basis of the space.
fn full_orthogonal_basis(rng: &mut ChaCha8Rng, dim: usize, seeds: usize) -> Vec<ExactVector> {
    let mut vs: Vec<ExactVector> = (0..seeds).map(|_| random_vector(rng, dim)).collect();
    for k in 0..dim {
        vs.push(ExactVector::new(
            (0..dim).map(|j| Scalar::from_int(i64::from(j == k))).collect(),
        ));
    }
    let mut basis: Vec<ExactVector> = Vec::new();
    for v in &vs {
        let mut w = v.clone();
        for u in &basis {
            let coeff = &u.inner_product(&w).unwrap() / &u.norm_sqr();
            w = w.sub(&u.scale(&coeff));
        }
        if !w.is_zero() {
            basis.push(primitive(&w));
        }
    }
    assert_eq!(basis.len(), dim);
    basis
}

#[test]
fn criterion_7_randomized_property_suite() {
    let cases = 1000;
    let workers = 2;
    let handles: Vec<_> = (0..workers)
        .map(|w| std::thread::spawn(move || property_cases(w as u64, cases / workers)))
        .collect();
    let (mut ran_c, mut ker_c, mut additivity) = (0u32, 0u32, 0u32);
    for h in handles {
        let (r, k, a) = h.join().expect("property worker panicked");
        ran_c += r;
        ker_c += k;
        additivity += a;
    }

    // the conditional branches must have fired on the overwhelming
    // majority of cases, or the suite is not testing what it claims
    assert!(ran_c > 600, "range reduction exercised only {ran_c} times");
    assert!(ker_c > 600, "kernel reduction exercised only {ker_c} times");
    assert!(additivity > 900, "additivity exercised only {additivity} times");
    println!(
        "criterion 7 PASS: {cases} random cases (dims 2-8); reductions {ran_c}/{ker_c}, additivity {additivity}"
    );
}

/// Runs `cases` randomized checks with a worker-specific seed; returns
/// how often the range-reduction, kernel-reduction, and additivity
/// branches fired.
fn property_cases(worker: u64, cases: usize) -> (u32, u32, u32) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157 + worker);
    let (mut ran_c, mut ker_c, mut additivity) = (0u32, 0u32, 0u32);

    for case in 0..cases {
        let dim = rng.gen_range(2..=8);
        let rank = rng.gen_range(0..=dim);
        let seeds = rng.gen_range(0..=dim);
        let basis = full_orthogonal_basis(&mut rng, dim, seeds);
        let mut matrix = ExactMatrix::zeros(dim, dim);
        for u in basis.iter().take(rank) {
            let inv = u.norm_sqr().inverse().unwrap();
            matrix = matrix.add(&u.outer_product(u).scale(&inv));
        }
        let p = Projector::try_new(matrix, format!("random #{worker}/{case}"))
            .expect("orthogonal sums of rank-1 projectors are projectors");
        let psi = State::new(random_nonzero_vector(&mut rng, dim), "psi").unwrap();
        let phi = State::new(random_nonzero_vector(&mut rng, dim), "phi").unwrap();

        // (f) projector invariants
        assert!(p.matrix().is_hermitian());
        assert!(p.matrix().is_idempotent());
        let neg = p.negate();
        assert_eq!(neg.negate(), p);
        assert_eq!(p.rank(), rank);
        assert_eq!(rank + neg.rank(), dim);

        // (a) bridge biconditional between the partial semantics and the degree
        let degree = born_degree(&p, &psi).unwrap();
        assert!(probability_bridge_check(&p, &psi).unwrap());
        match supervaluate(&p, &psi).unwrap() {
            TruthValue::ClassicalTrue => assert!(degree.is_one()),
            TruthValue::ClassicalFalse => assert!(degree.is_zero()),
            TruthValue::Gap => assert!(degree > rat(0, 1) && degree < rat(1, 1)),
            other => panic!("supervaluate returned {other}"),
        }

        // (b) diagonal weak value equals the Born degree
        assert_eq!(
            weak_value(&p, &psi, &psi).unwrap(),
            Scalar::from_rational(degree.clone())
        );

        // (c) eigenstate reduction to 1 and 0
        let fixed = p.apply(psi.vector()).unwrap();
        if !fixed.is_zero() {
            let pre = State::new(fixed, "range state").unwrap();
            if !phi.vector().inner_product(pre.vector()).unwrap().is_zero() {
                assert_eq!(weak_value(&p, &pre, &phi).unwrap(), Scalar::one());
                ran_c += 1;
            }
        }
        let killed = neg.apply(psi.vector()).unwrap();
        if !killed.is_zero() {
            let pre = State::new(killed, "kernel state").unwrap();
            if !phi.vector().inner_product(pre.vector()).unwrap().is_zero() {
                assert_eq!(weak_value(&p, &pre, &phi).unwrap(), Scalar::zero());
                ker_c += 1;
            }
        }

        // (d) weak additivity over an orthogonal rank-1 resolution
        if !phi.vector().inner_product(psi.vector()).unwrap().is_zero() {
            let mut total = Scalar::zero();
            for u in &basis {
                let pk = Projector::from_ket(u, "resolution element").unwrap();
                total = &total + &weak_value(&pk, &psi, &phi).unwrap();
            }
            assert_eq!(total, Scalar::one());
            additivity += 1;
        }

        // (e) scale invariance under random nonzero rescaling
        let scaled_psi = psi.scale(&random_nonzero_scalar(&mut rng)).unwrap();
        let scaled_phi = phi.scale(&random_nonzero_scalar(&mut rng)).unwrap();
        assert_eq!(supervaluate(&p, &psi).unwrap(), supervaluate(&p, &scaled_psi).unwrap());
        assert_eq!(degree, born_degree(&p, &scaled_psi).unwrap());
        if !phi.vector().inner_product(psi.vector()).unwrap().is_zero() {
            assert_eq!(
                weak_value(&p, &psi, &phi).unwrap(),
                weak_value(&p, &scaled_psi, &scaled_phi).unwrap()
            );
        }
    }

    (ran_c, ker_c, additivity)
}

// ---------------------------------------------------------------------
// criterion 8: DSL and CLI surfaces
// ---------------------------------------------------------------------

#[test]
fn criterion_8a_bundled_script_matches_programmatic_report() {
    let source = std::fs::read_to_string(workspace_path("scripts/hardy.qsem")).unwrap();
    let results = dsl::run(&dsl::check(dsl::parse(&source).unwrap()).unwrap()).unwrap();
    let report = paradox_report(&build_scenario());

    assert_eq!(results.len(), 11);
    // classical chain and gap findings
    assert_eq!(results[0].value, report.classical_chain.o_valuation);
    assert_eq!(
        results[1].value,
        TruthValue::Degree(report.classical_chain.quantum_degree.clone())
    );
    assert_eq!(results[1].value, report.many_valued_section.d1_in_psi_not_o);
    assert_eq!(results[2].value, report.supervaluationist_section.d1_in_psi_not_o);
    assert_eq!(results[3].value, report.supervaluationist_section.o_in_psi_d1);
    assert_eq!(results[4].value, report.many_valued_section.o_in_psi_d1);
    // weak section
    assert_eq!(results[5].value, report.weak_section.d1_in_psi_not_o);
    assert_eq!(results[6].value, report.weak_section.o_in_psi_d1);
    // which-way entries, compared on exact values
    let table = &report.which_way_table.table;
    assert_eq!(results[7].value.value_string(), table.oo.to_display_string());
    assert_eq!(results[8].value.value_string(), table.on.to_display_string());
    assert_eq!(results[9].value.value_string(), table.no.to_display_string());
    assert_eq!(results[10].value.value_string(), table.nn.to_display_string());
    println!("criterion 8a PASS: DSL path reproduces all 11 report values");
}

#[test]
fn criterion_8b_hardy_json_matches_golden_file() {
    let golden = std::fs::read(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/hardy.json"),
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qsem"))
        .args(["hardy", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, golden, "hardy --format json drifted from the golden file");
    println!("criterion 8b PASS: hardy --format json is byte-identical to the golden file");
}

#[test]
fn criterion_8c_script_corpus_round_trips() {
    let dir = workspace_path("scripts");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("qsem") {
            continue;
        }
        let source = std::fs::read_to_string(&path).unwrap();
        let script = dsl::parse(&source).unwrap();
        let reparsed = dsl::parse(&script.to_string()).unwrap();
        assert_eq!(reparsed, script, "round trip failed for {}", path.display());
        count += 1;
    }
    assert!(count >= 3);
    println!("criterion 8c PASS: parse round-trip holds on {count} bundled scripts");
}
