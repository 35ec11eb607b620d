use serde::Serialize;

use super::halfspace::{halfspace_pair, subgraph_components};
use super::hyperplane::Hyperplane;
use crate::error::Error;
use crate::gkm_graph::{GkmGraph, PairDecomposition};

/// Default cap on the number of hyperplane subsets examined for
/// assumption (2).
pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

/// Common subgraph of a family of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub vertices: Vec<usize>,
    pub darts: Vec<usize>,
    pub components: usize,
    /// Number of darts per vertex when it is the same at every vertex.
    pub valence: Option<usize>,
}

impl Intersection {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }
}

/// Vertices and darts shared by every member of `subset`. An empty subset
/// yields the whole graph.
pub fn intersect_hyperplanes(g: &GkmGraph, subset: &[&Hyperplane]) -> Intersection {
    let in_vertex: Vec<bool> = (0..g.num_vertices()).map(|v| subset.iter().all(|h| h.contains_vertex(v))).collect();
    let in_dart: Vec<bool> = (0..g.darts().len()).map(|d| subset.iter().all(|h| h.contains_dart(d))).collect();
    let vertices: Vec<usize> = (0..g.num_vertices()).filter(|&v| in_vertex[v]).collect();
    let darts: Vec<usize> = (0..g.darts().len()).filter(|&d| in_dart[d]).collect();
    let mut valences = vertices.iter().map(|&v| g.darts_at(v).iter().filter(|&&d| in_dart[d]).count());
    let first = valences.next();
    let valence = match first {
        Some(k) if valences.all(|x| x == k) => Some(k),
        _ => None,
    };
    let components = subgraph_components(g, &in_vertex, &in_dart);
    Intersection { vertices, darts, components, valence }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneCheck {
    pub hyperplane: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetCheck {
    pub subset: Vec<String>,
    pub passed: bool,
    pub vertices: usize,
    pub components: usize,
}

/// Outcome of checking both assumptions of the presentation theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssumptionReport {
    pub assumption1: Vec<HyperplaneCheck>,
    /// Every family with a nonempty intersection, in enumeration order.
    pub assumption2: Vec<SubsetCheck>,
    pub subsets_examined: u64,
    /// True when the subset cap stopped the enumeration early.
    pub truncated: bool,
}

impl AssumptionReport {
    pub fn assumption1_holds(&self) -> bool {
        self.assumption1.iter().all(|c| c.passed)
    }

    /// Conclusive only when the enumeration was not truncated.
    pub fn assumption2_holds(&self) -> bool {
        !self.truncated && self.assumption2.iter().all(|c| c.passed)
    }

    pub fn holds(&self) -> bool {
        self.assumption1_holds() && self.assumption2_holds()
    }
}

/// Assumption (1) through [`halfspace_pair`] for every hyperplane, and
/// assumption (2) over every family of hyperplanes, pruning supersets of
/// families with empty intersection.
pub fn check_assumptions(g: &GkmGraph, pairs: &PairDecomposition, hyperplanes: &[Hyperplane], subset_cap: u64) -> AssumptionReport {
    let assumption1 = hyperplanes
        .iter()
        .map(|l| match halfspace_pair(g, pairs, l) {
            Ok(_) => HyperplaneCheck { hyperplane: l.name.clone(), passed: true, check: None, detail: None },
            Err(Error::AssumptionOneViolation { check, detail, .. }) => {
                HyperplaneCheck { hyperplane: l.name.clone(), passed: false, check: Some(check), detail: Some(detail) }
            }
            Err(e) => HyperplaneCheck { hyperplane: l.name.clone(), passed: false, check: Some("construction".into()), detail: Some(e.to_string()) },
        })
        .collect();

    let mut search = SubsetSearch { g, hyperplanes, cap: subset_cap, examined: 0, truncated: false, out: Vec::new() };
    search.extend(&mut Vec::new(), 0);
    AssumptionReport {
        assumption1,
        assumption2: search.out,
        subsets_examined: search.examined,
        truncated: search.truncated,
    }
}

struct SubsetSearch<'a> {
    g: &'a GkmGraph,
    hyperplanes: &'a [Hyperplane],
    cap: u64,
    examined: u64,
    truncated: bool,
    out: Vec<SubsetCheck>,
}

impl SubsetSearch<'_> {
    fn extend(&mut self, current: &mut Vec<usize>, start: usize) {
        for i in start..self.hyperplanes.len() {
            if self.examined >= self.cap {
                self.truncated = true;
                return;
            }
            current.push(i);
            self.examined += 1;
            let members: Vec<&Hyperplane> = current.iter().map(|&j| &self.hyperplanes[j]).collect();
            let k = intersect_hyperplanes(self.g, &members);
            if !k.is_empty() {
                self.out.push(SubsetCheck {
                    subset: members.iter().map(|h| h.name.clone()).collect(),
                    passed: k.is_connected(),
                    vertices: k.vertices.len(),
                    components: k.components,
                });
                self.extend(current, i + 1);
            }
            current.pop();
        }
    }
}
