use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::Geometry;

/// Default cap on backtracking nodes for the shelling search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// The search budget from `GKM_SEARCH_BUDGET`, or the default.
pub fn search_budget_from_env() -> u64 {
    std::env::var("GKM_SEARCH_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEARCH_BUDGET)
}

/// The complex on the hyperplanes whose faces are the families with a
/// nonempty common intersection. Facet `i` is the set of hyperplanes
/// through graph vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// Hyperplane names, one per complex vertex.
    pub vertices: Vec<String>,
    /// Facets as sorted index lists, indexed by graph vertex.
    pub facets: Vec<Vec<usize>>,
    /// Graph vertex ids, parallel to `facets`.
    pub facet_ids: Vec<String>,
    pub dimension: usize,
}

impl SimplicialComplex {
    /// All faces (including the empty face), sorted.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        self.facets.iter().flat_map(|f| subsets(f)).collect()
    }

    /// Number of faces of each dimension `-1..=dimension`, indexed by
    /// face size.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.dimension + 2];
        for f in self.faces() {
            out[f.len()] += 1;
        }
        out
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| face.iter().all(|v| f.contains(v)))
    }

    pub fn facet_index(&self, vertex_id: &str) -> Option<usize> {
        self.facet_ids.iter().position(|id| id == vertex_id)
    }
}

/// All subsets of a sorted list, as sorted lists.
pub fn subsets(set: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << set.len()).map(|mask| set.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()).collect()
}

/// Builds the complex of the hyperplane arrangement of `g`.
pub fn build_complex(g: &GkmGraph, geometry: &Geometry) -> Result<SimplicialComplex> {
    let n = g.rank();
    let facets: Vec<Vec<usize>> = (0..g.num_vertices())
        .map(|v| (0..geometry.len()).filter(|&i| geometry.hyperplanes[i].hyperplane.contains_vertex(v)).collect())
        .collect();
    for (v, f) in facets.iter().enumerate() {
        if f.len() != n {
            return Err(Error::PurityFailure(format!("vertex `{}` lies on {} hyperplanes, expected {n}", g.vertex_id(v), f.len())));
        }
    }
    let distinct: BTreeSet<&Vec<usize>> = facets.iter().collect();
    if distinct.len() != facets.len() {
        return Err(Error::PurityFailure("two vertices span the same facet, so facets and vertices do not correspond".into()));
    }
    Ok(SimplicialComplex { vertices: geometry.names(), facets, facet_ids: g.vertex_ids().to_vec(), dimension: n - 1 })
}

/// A shelling: facet order and the unique minimal new face of each step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shelling {
    /// Facet indices (graph vertices) in shelling order.
    pub order: Vec<usize>,
    /// `μ_i` as sorted complex-vertex indices.
    pub minimal: Vec<Vec<usize>>,
}

/// The unique minimal face of `facet` that is not in any of `earlier`, or
/// `None` when the new faces have several minimal elements (or none).
pub fn minimal_new_face(facet: &[usize], earlier: &[&Vec<usize>]) -> Option<Vec<usize>> {
    let fresh: Vec<Vec<usize>> =
        subsets(facet).into_iter().filter(|s| !earlier.iter().any(|f| s.iter().all(|v| f.contains(v)))).collect();
    let minimal: Vec<&Vec<usize>> = fresh.iter().filter(|s| !fresh.iter().any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))).collect();
    match minimal.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    }
}

/// Checks a facet order step by step and records the minimal new faces.
pub fn verify_shelling(complex: &SimplicialComplex, order: &[usize]) -> Result<Shelling> {
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if order.len() != complex.facets.len() || distinct.len() != order.len() || order.iter().any(|&i| i >= complex.facets.len()) {
        return Err(Error::InvalidShelling("the order must list every facet exactly once".into()));
    }
    let mut minimal = Vec::with_capacity(order.len());
    for (i, &f) in order.iter().enumerate() {
        let earlier: Vec<&Vec<usize>> = order[..i].iter().map(|&j| &complex.facets[j]).collect();
        match minimal_new_face(&complex.facets[f], &earlier) {
            Some(mu) => minimal.push(mu),
            None => {
                return Err(Error::InvalidShelling(format!(
                    "facet {} at position {} has no unique minimal new face",
                    complex.facet_ids[f],
                    i + 1
                )))
            }
        }
    }
    Ok(Shelling { order: order.to_vec(), minimal })
}

/// Backtracking search for a shelling. Candidates whose minimal new face
/// is smallest are tried first, ties broken by vertex id. A verified
/// `hint` is returned as is.
pub fn find_shelling(complex: &SimplicialComplex, hint: Option<&[usize]>, budget: u64) -> Result<Shelling> {
    if let Some(order) = hint {
        return verify_shelling(complex, order);
    }
    let mut by_id: Vec<usize> = (0..complex.facets.len()).collect();
    by_id.sort_by(|&a, &b| complex.facet_ids[a].cmp(&complex.facet_ids[b]));
    let mut search = Search { complex, by_id, budget, explored: 0, order: Vec::new(), minimal: Vec::new(), used: vec![false; complex.facets.len()] };
    match search.run()? {
        true => Ok(Shelling { order: search.order, minimal: search.minimal }),
        false => Err(Error::NotShellable { explored: search.explored }),
    }
}

struct Search<'a> {
    complex: &'a SimplicialComplex,
    by_id: Vec<usize>,
    budget: u64,
    explored: u64,
    order: Vec<usize>,
    minimal: Vec<Vec<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self) -> Result<bool> {
        if self.order.len() == self.complex.facets.len() {
            return Ok(true);
        }
        let earlier: Vec<&Vec<usize>> = self.order.iter().map(|&j| &self.complex.facets[j]).collect();
        let mut candidates: Vec<(usize, usize, Vec<usize>)> = self
            .by_id
            .iter()
            .enumerate()
            .filter(|(_, &f)| !self.used[f])
            .filter_map(|(rank, &f)| minimal_new_face(&self.complex.facets[f], &earlier).map(|mu| (mu.len(), rank, mu)))
            .collect();
        candidates.sort();
        for (_, rank, mu) in candidates {
            self.explored += 1;
            if self.explored > self.budget {
                return Err(Error::NotShellable { explored: self.explored - 1 });
            }
            let f = self.by_id[rank];
            self.used[f] = true;
            self.order.push(f);
            self.minimal.push(mu);
            if self.run()? {
                return Ok(true);
            }
            self.used[f] = false;
            self.order.pop();
            self.minimal.pop();
        }
        Ok(false)
    }
}
