//! Text and JSON renderers for query results and the paradox report.
//!
//! JSON is stable by construction: struct field order fixes key order,
//! every number is an exact string like `"1/12"` (binary floats cannot
//! represent them), and rationals arrive fully reduced from the core.

use serde::Serialize;

use qsem_core::dsl::QueryResult;
use qsem_core::hardy::ParadoxReport;
use qsem_core::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn to_pretty_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize infallibly");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------
// `run` output
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct QueriesDoc {
    queries: Vec<QueryDoc>,
}

#[derive(Serialize)]
struct QueryDoc {
    query: String,
    semantics: &'static str,
    kind: &'static str,
    value: String,
}

pub fn render_queries(results: &[QueryResult], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in results {
                out.push_str(&format!("{} => {}\n", r.query, r.value));
            }
            out
        }
        Format::Json => {
            let doc = QueriesDoc {
                queries: results
                    .iter()
                    .map(|r| QueryDoc {
                        query: r.query.clone(),
                        semantics: r.mode.as_str(),
                        kind: r.value.kind(),
                        value: r.value.value_string(),
                    })
                    .collect(),
            };
            to_pretty_json(&doc)
        }
    }
}

// ---------------------------------------------------------------------
// `hardy` output
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct HardyDoc {
    hardy_report: ReportDoc,
}

#[derive(Serialize)]
struct ReportDoc {
    classical_chain: ClassicalChainDoc,
    supervaluationist_section: SupervaluationistDoc,
    many_valued_section: ManyValuedDoc,
    weak_section: WeakDoc,
    which_way_table: WhichWayDoc,
}

#[derive(Serialize)]
struct ClassicalChainDoc {
    o_valuation: String,
    d1_tracks_o: bool,
    classical_conclusion: String,
    quantum_degree: String,
    contradiction: bool,
}

#[derive(Serialize)]
struct SupervaluationistDoc {
    #[serde(rename = "D1_in_psi_notO")]
    d1_in_psi_not_o: &'static str,
    #[serde(rename = "O_in_psi_D1")]
    o_in_psi_d1: &'static str,
    #[serde(rename = "ker_P_O_vs_ran_P_D1")]
    ker_o_vs_ran_d1: &'static str,
    #[serde(rename = "ker_P_O_vs_ker_P_D1")]
    ker_o_vs_ker_d1: &'static str,
}

#[derive(Serialize)]
struct ManyValuedDoc {
    #[serde(rename = "D1_in_psi_notO")]
    d1_in_psi_not_o: String,
    #[serde(rename = "O_in_psi_D1")]
    o_in_psi_d1: String,
}

#[derive(Serialize)]
struct WeakDoc {
    #[serde(rename = "D1")]
    d1: String,
    #[serde(rename = "O")]
    o: String,
    non_implications: Vec<NonImplicationDoc>,
}

#[derive(Serialize)]
struct NonImplicationDoc {
    antecedent: String,
    consequent: String,
    witness: String,
    holds: bool,
}

#[derive(Serialize)]
struct WhichWayDoc {
    #[serde(rename = "OO")]
    oo: String,
    #[serde(rename = "ON")]
    on: String,
    #[serde(rename = "NO")]
    no: String,
    #[serde(rename = "NN")]
    nn: String,
    total: String,
    note: String,
}

fn rational_string(r: &qsem_core::Rational) -> String {
    Scalar::from_rational(r.clone()).to_display_string()
}

pub fn render_hardy(report: &ParadoxReport, format: Format) -> String {
    match format {
        Format::Text => render_hardy_text(report),
        Format::Json => to_pretty_json(&HardyDoc {
            hardy_report: ReportDoc {
                classical_chain: ClassicalChainDoc {
                    o_valuation: report.classical_chain.o_valuation.value_string(),
                    d1_tracks_o: report.classical_chain.d1_tracks_o,
                    classical_conclusion: rational_string(
                        &report.classical_chain.classical_conclusion,
                    ),
                    quantum_degree: rational_string(&report.classical_chain.quantum_degree),
                    contradiction: report.classical_chain.contradiction,
                },
                supervaluationist_section: SupervaluationistDoc {
                    d1_in_psi_not_o: report.supervaluationist_section.d1_in_psi_not_o.kind(),
                    o_in_psi_d1: report.supervaluationist_section.o_in_psi_d1.kind(),
                    ker_o_vs_ran_d1: report.supervaluationist_section.ker_o_vs_ran_d1.as_str(),
                    ker_o_vs_ker_d1: report.supervaluationist_section.ker_o_vs_ker_d1.as_str(),
                },
                many_valued_section: ManyValuedDoc {
                    d1_in_psi_not_o: report.many_valued_section.d1_in_psi_not_o.value_string(),
                    o_in_psi_d1: report.many_valued_section.o_in_psi_d1.value_string(),
                },
                weak_section: WeakDoc {
                    d1: report.weak_section.d1_in_psi_not_o.value_string(),
                    o: report.weak_section.o_in_psi_d1.value_string(),
                    non_implications: report
                        .weak_section
                        .non_implications
                        .iter()
                        .map(|n| NonImplicationDoc {
                            antecedent: n.antecedent.clone(),
                            consequent: n.consequent.clone(),
                            witness: n.witness.clone(),
                            holds: n.holds,
                        })
                        .collect(),
                },
                which_way_table: WhichWayDoc {
                    oo: report.which_way_table.table.oo.to_display_string(),
                    on: report.which_way_table.table.on.to_display_string(),
                    no: report.which_way_table.table.no.to_display_string(),
                    nn: report.which_way_table.table.nn.to_display_string(),
                    total: report.which_way_table.total.to_display_string(),
                    note: report.which_way_table.note.clone(),
                },
            },
        }),
    }
}

/// Narrative order: the classical chain first, then the gap findings,
/// then the degree and weak resolutions.
fn render_hardy_text(report: &ParadoxReport) -> String {
    let mut out = String::new();
    let line = |out: &mut String, s: &str| {
        out.push_str(s);
        out.push('\n');
    };

    line(&mut out, "Hardy paradox report");
    line(&mut out, "====================");
    line(&mut out, "");
    line(&mut out, "Classical chain");
    line(
        &mut out,
        &format!(
            "  valuation of O in psi_notO: {}",
            report.classical_chain.o_valuation
        ),
    );
    line(&mut out, "  premise: D1 carries the same truth value as O");
    let verdict = if report.classical_chain.contradiction { "PARADOX" } else { "consistent" };
    line(
        &mut out,
        &format!(
            "  classical conclusion: P[D1]={}; quantum value: {}; {}",
            rational_string(&report.classical_chain.classical_conclusion),
            rational_string(&report.classical_chain.quantum_degree),
            verdict
        ),
    );
    line(&mut out, "");
    line(&mut out, "Supervaluationist semantics");
    line(
        &mut out,
        &format!("  D1 in psi_notO: {}", report.supervaluationist_section.d1_in_psi_not_o),
    );
    line(&mut out, &format!("  O in psi_D1: {}", report.supervaluationist_section.o_in_psi_d1));
    line(
        &mut out,
        &format!(
            "  ker(P_O) vs ran(P_D1): {}",
            report.supervaluationist_section.ker_o_vs_ran_d1
        ),
    );
    line(
        &mut out,
        &format!(
            "  ker(P_O) vs ker(P_D1): {}",
            report.supervaluationist_section.ker_o_vs_ker_d1
        ),
    );
    line(&mut out, "");
    line(&mut out, "Many-valued semantics");
    line(&mut out, &format!("  D1 in psi_notO: {}", report.many_valued_section.d1_in_psi_not_o));
    line(&mut out, &format!("  O in psi_D1: {}", report.many_valued_section.o_in_psi_d1));
    line(&mut out, "");
    line(&mut out, "Weak-valued semantics");
    line(
        &mut out,
        &format!(
            "  D1 in psi_notO post psi_D1: {}",
            report.weak_section.d1_in_psi_not_o
        ),
    );
    line(
        &mut out,
        &format!("  O in psi_D1 post psi_notO: {}", report.weak_section.o_in_psi_d1),
    );
    for n in &report.weak_section.non_implications {
        let status = if n.holds { "holds" } else { "fails" };
        line(
            &mut out,
            &format!(
                "  \"{}\" implies \"{}\": {} ({})",
                n.antecedent, n.consequent, status, n.witness
            ),
        );
    }
    line(&mut out, "");
    line(&mut out, "Which-way weak values (pre psi_notO, post psi_D1)");
    for (label, value) in report.which_way_table.table.entries() {
        line(&mut out, &format!("  {label} = {value}"));
    }
    line(&mut out, &format!("  total = {}", report.which_way_table.total));
    line(&mut out, &format!("  note: {}", report.which_way_table.note));
    out
}
