//! Hyperplanes, halfspaces, Thom classes and the assumptions of the
//! presentation theorem.

mod assumptions;
mod halfspace;
mod hyperplane;

pub use assumptions::{
    check_assumptions, intersect_hyperplanes, AssumptionReport, HyperplaneCheck, Intersection, SubsetCheck, DEFAULT_SUBSET_CAP,
};
pub use halfspace::{halfspace_pair, subgraph_components, thom_class, Halfspace, ThomClass};
pub use hyperplane::{all_hyperplanes, hyperplane_through, natural_key, Hyperplane};

use crate::error::{Error, Result};
use crate::gkm_graph::{pair_decomposition, GkmGraph, PairDecomposition};
use crate::par::{self, Exec};

/// A hyperplane with its two halfspaces, the positive one first.
#[derive(Clone, Debug)]
pub struct OrientedHyperplane {
    pub hyperplane: Hyperplane,
    pub positive: Halfspace,
    pub negative: Halfspace,
}

/// The pair decomposition, all hyperplanes and their oriented halfspaces.
/// Built only when assumption (1) holds for every hyperplane.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub pairs: PairDecomposition,
    pub hyperplanes: Vec<OrientedHyperplane>,
}

impl Geometry {
    pub fn build(g: &GkmGraph) -> Result<Geometry> {
        Self::build_with(g, Exec::default())
    }

    pub fn build_with(g: &GkmGraph, exec: Exec) -> Result<Geometry> {
        let pairs = pair_decomposition(g)?;
        let hyperplanes = all_hyperplanes(g, &pairs)?;
        let hyperplanes = par::try_map(exec, &hyperplanes, |l| orient(g, &pairs, l))?;
        Ok(Geometry { pairs, hyperplanes })
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.hyperplanes.iter().map(|h| h.hyperplane.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.hyperplanes.iter().position(|h| h.hyperplane.name == name)
    }
}

/// Orders the halfspace pair of `l`: the positive side has the hinted
/// normal dart when the graph names `l`, otherwise it is the side with the
/// lexicographically smaller (vertex ids, dart ids) key.
pub fn orient(g: &GkmGraph, pairs: &PairDecomposition, l: &Hyperplane) -> Result<OrientedHyperplane> {
    let (a, b) = halfspace_pair(g, pairs, l)?;
    let a_first = match g.hints().hyperplanes.get(&l.name) {
        Some(&d) => {
            let v = g.dart(d).from;
            if a.normal(v) == Some(d) {
                true
            } else if b.normal(v) == Some(d) {
                false
            } else {
                return Err(Error::InvalidHint(format!("dart `{}` is not a normal of {}", g.dart_id(d), l.name)));
            }
        }
        None => a.key(g) <= b.key(g),
    };
    let (positive, negative) = if a_first { (a, b) } else { (b, a) };
    Ok(OrientedHyperplane { hyperplane: l.clone(), positive, negative })
}
