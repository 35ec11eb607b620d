use num_traits::{One, Signed};
use serde::Serialize;

use super::{pair_decomposition, GkmGraph};
use crate::exact_algebra::{determinant, lattice_rank, IntMatrix, LatticeVector};

/// Outcome of one named axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub offending: Vec<String>,
    pub message: String,
}

/// All axiom checks for a T*Cⁿ-modeled GKM graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }
}

struct Collector {
    checks: Vec<CheckResult>,
}

impl Collector {
    fn record(&mut self, check: &str, offending: Vec<String>, message: &str) {
        let passed = offending.is_empty();
        self.checks.push(CheckResult {
            check: check.to_string(),
            passed,
            offending,
            message: if passed { String::new() } else { message.to_string() },
        });
    }
}

/// Runs every axiom check. Failures are collected, never raised.
///
/// Check names: `edge_sign`, `pairwise_independence`,
/// `three_independence`, `connection`, `congruence`, `pair_decomposition`,
/// `pair_preservation`, `span`, `not_residual`.
pub fn validate_axial(g: &GkmGraph) -> ValidationReport {
    let mut out = Collector { checks: Vec::new() };
    let x = g.residual();

    let bad: Vec<String> = g
        .edges()
        .filter(|&e| {
            let o = g.dart(e).opposite.unwrap();
            let (a, b) = (g.axial(e), g.axial(o));
            *b != *a && *b != a.neg()
        })
        .map(|e| g.dart_id(e).to_string())
        .collect();
    out.record("edge_sign", bad, "opposite darts must carry ±α");

    let mut bad = Vec::new();
    for v in 0..g.num_vertices() {
        let at = g.darts_at(v);
        for (i, &a) in at.iter().enumerate() {
            for &b in &at[i + 1..] {
                if lattice_rank(&[g.axial(a).clone(), g.axial(b).clone()]).unwrap() < 2 {
                    bad.push(format!("{}:{}+{}", g.vertex_id(v), g.dart_id(a), g.dart_id(b)));
                }
            }
        }
    }
    out.record("pairwise_independence", bad, "two axial values at a vertex are linearly dependent");

    let mut bad = Vec::new();
    if g.lattice_len() >= 3 {
        for v in 0..g.num_vertices() {
            let at = g.darts_at(v);
            'triples: for i in 0..at.len() {
                for j in i + 1..at.len() {
                    for k in j + 1..at.len() {
                        let vs = [g.axial(at[i]).clone(), g.axial(at[j]).clone(), g.axial(at[k]).clone()];
                        if lattice_rank(&vs).unwrap() < 3 {
                            bad.push(g.vertex_id(v).to_string());
                            break 'triples;
                        }
                    }
                }
            }
        }
    }
    out.record("three_independence", bad, "three axial values at a vertex are linearly dependent");

    let conn = g.connection();
    let bad: Vec<String> = g
        .edge_darts()
        .filter(|&e| {
            let bar = g.dart(e).opposite.unwrap();
            conn.apply(e, e) != bar || conn.map(e).iter().any(|(&a, &b)| conn.apply(bar, b) != a)
        })
        .map(|e| g.dart_id(e).to_string())
        .collect();
    out.record("connection", bad, "∇_e(e) must be the opposite dart and ∇ of the opposite must invert ∇_e");

    let bad: Vec<String> = g
        .edge_darts()
        .filter(|&e| conn.map(e).iter().any(|(&a, &b)| g.axial(a).sub(g.axial(b)).multiple_of(g.axial(e)).is_none()))
        .map(|e| g.dart_id(e).to_string())
        .collect();
    out.record("congruence", bad, "α(ε') - α(∇_ε ε') is not a multiple of α(ε)");

    match pair_decomposition(g) {
        Ok(pairs) => {
            out.record("pair_decomposition", vec![], "");
            out.record("pair_preservation", vec![], "");
            let bad: Vec<String> = (0..g.num_vertices())
                .filter(|&v| {
                    let mut rows: Vec<LatticeVector> = pairs.pairs_at(v).iter().map(|&(a, _)| g.axial(a).clone()).collect();
                    rows.push(x.clone());
                    let m = IntMatrix::from_rows(rows.iter().map(LatticeVector::to_bigints).collect(), g.lattice_len()).unwrap();
                    !determinant(&m).unwrap().abs().is_one()
                })
                .map(|v| g.vertex_id(v).to_string())
                .collect();
            out.record("span", bad, "{α(ε_j⁺)} ∪ {x} is not a basis of Z^(n+1)");
        }
        Err(crate::Error::PairNotPreserved { edge }) => {
            out.record("pair_decomposition", vec![], "");
            out.record("pair_preservation", vec![edge], "∇ maps a pair to a non-pair");
            out.record("span", vec!["<skipped>".into()], "requires a pair decomposition preserved by ∇");
        }
        Err(e) => {
            out.record("pair_decomposition", vec![e.to_string()], "darts do not split into pairs summing to x");
            out.record("pair_preservation", vec!["<skipped>".into()], "requires a pair decomposition");
            out.record("span", vec!["<skipped>".into()], "requires a pair decomposition");
        }
    }

    let bad: Vec<String> = g.darts().iter().filter(|d| d.axial == x).map(|d| d.id.clone()).collect();
    out.record("not_residual", bad, "a dart carries the residual class x");

    ValidationReport { checks: out.checks }
}
