use std::collections::BTreeSet;

use super::hyperplane::Hyperplane;
use crate::error::{Error, Result};
use crate::exact_algebra::LatticeVector;
use crate::gkm_graph::{GkmGraph, PairDecomposition};

/// A pre-halfspace: a subgraph with `2n-1` or `2n` darts at each member
/// vertex, closed under the connection, with the boundary congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    in_vertex: Vec<bool>,
    in_dart: Vec<bool>,
    /// `n^H(p)` for boundary vertices.
    normals: Vec<Option<usize>>,
}

impl Halfspace {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.in_vertex[v]
    }

    pub fn contains_dart(&self, d: usize) -> bool {
        self.in_dart[d]
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.in_vertex.len()).filter(|&v| self.in_vertex[v]).collect()
    }

    pub fn darts(&self) -> Vec<usize> {
        (0..self.in_dart.len()).filter(|&d| self.in_dart[d]).collect()
    }

    /// The normal dart at a boundary vertex.
    pub fn normal(&self, v: usize) -> Option<usize> {
        self.normals[v]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.normals[v].is_some()
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.in_vertex[v] && self.normals[v].is_none()
    }

    pub fn boundary_vertices(&self) -> Vec<usize> {
        (0..self.normals.len()).filter(|&v| self.normals[v].is_some()).collect()
    }

    /// Sort key: sorted vertex ids, then sorted dart ids.
    pub fn key(&self, g: &GkmGraph) -> (Vec<String>, Vec<String>) {
        let mut vs: Vec<String> = self.vertices().into_iter().map(|v| g.vertex_id(v).to_string()).collect();
        vs.sort();
        let mut ds: Vec<String> = self.darts().into_iter().map(|d| g.dart_id(d).to_string()).collect();
        ds.sort();
        (vs, ds)
    }

    /// Checks the pre-halfspace axioms for the subgraph given by membership
    /// flags. The error string names the failing axiom.
    pub fn from_subgraph(g: &GkmGraph, in_vertex: Vec<bool>, in_dart: Vec<bool>) -> std::result::Result<Halfspace, String> {
        let n = g.rank();
        let mut normals = vec![None; g.num_vertices()];
        let mut any_boundary = false;
        for d in 0..g.darts().len() {
            if in_dart[d] {
                let dart = g.dart(d);
                if !in_vertex[dart.from] {
                    return Err(format!("subgraph: dart `{}` starts outside the vertex set", dart.id));
                }
                if let (Some(t), Some(o)) = (dart.to, dart.opposite) {
                    if !in_vertex[t] || !in_dart[o] {
                        return Err(format!("subgraph: edge `{}` is not contained with both ends", dart.id));
                    }
                }
            }
        }
        for v in 0..g.num_vertices() {
            if !in_vertex[v] {
                continue;
            }
            let missing: Vec<usize> = g.darts_at(v).iter().copied().filter(|&d| !in_dart[d]).collect();
            match missing.len() {
                0 => {}
                1 => {
                    normals[v] = Some(missing[0]);
                    any_boundary = true;
                }
                k => return Err(format!("valence: vertex `{}` has {} darts, expected {} or {}", g.vertex_id(v), 2 * n - k, 2 * n - 1, 2 * n)),
            }
        }
        if !any_boundary {
            return Err("valence: no vertex has 2n-1 darts".into());
        }
        let x = g.residual();
        for e in 0..g.darts().len() {
            if !in_dart[e] || g.dart(e).is_leg() {
                continue;
            }
            let (p, q) = (g.dart(e).from, g.dart(e).to.unwrap());
            if normals[p].is_none() && normals[q].is_some() {
                continue;
            }
            let image_ok = g.darts_at(p).iter().filter(|&&d| in_dart[d]).all(|&d| in_dart[g.connection().apply(e, d)]);
            if !image_ok {
                return Err(format!("closure: ∇ along `{}` leaves the subgraph", g.dart_id(e)));
            }
            if let (Some(np), None) = (normals[p], normals[q]) {
                if g.axial(np).sub(&x).multiple_of(g.axial(e)).is_none() {
                    return Err(format!("boundary congruence: α(n^H) - x is not a multiple of α(`{}`)", g.dart_id(e)));
                }
            }
        }
        Ok(Halfspace { in_vertex, in_dart, normals })
    }

    /// The opposite side `(Γ - H) ∪ ∂H`.
    pub fn opposite_side(&self, g: &GkmGraph, pairs: &PairDecomposition) -> std::result::Result<Halfspace, String> {
        let mut in_vertex: Vec<bool> = self.in_vertex.iter().map(|&b| !b).collect();
        let mut in_dart: Vec<bool> = self.in_dart.iter().map(|&b| !b).collect();
        for v in self.boundary_vertices() {
            in_vertex[v] = true;
            let normal = self.normals[v].unwrap();
            let partner = pairs.partner(normal);
            for &d in g.darts_at(v) {
                if d != partner {
                    in_dart[d] = true;
                }
            }
        }
        Halfspace::from_subgraph(g, in_vertex, in_dart)
    }

    /// Number of connected components of the subgraph.
    pub fn components(&self, g: &GkmGraph) -> usize {
        subgraph_components(g, &self.in_vertex, &self.in_dart)
    }
}

/// Connected components of a subgraph given by membership flags; edges
/// count when both their darts are members.
pub fn subgraph_components(g: &GkmGraph, in_vertex: &[bool], in_dart: &[bool]) -> usize {
    let mut seen = vec![false; g.num_vertices()];
    let mut count = 0;
    for s in 0..g.num_vertices() {
        if !in_vertex[s] || seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &d in g.darts_at(v) {
                let dart = g.dart(d);
                if let (Some(t), Some(o)) = (dart.to, dart.opposite) {
                    if in_dart[d] && in_dart[o] && in_vertex[t] && !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
    }
    count
}

/// Vertex-indexed degree-2 class: 0 outside, `x` inside, `α(n^H(p))` on the
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomClass {
    pub values: Vec<LatticeVector>,
}

impl ThomClass {
    pub fn value(&self, v: usize) -> &LatticeVector {
        &self.values[v]
    }

    /// Edge on which the congruence relation fails, if any.
    pub fn congruence_failure(&self, g: &GkmGraph) -> Option<usize> {
        g.edges().find(|&e| {
            let d = g.dart(e);
            self.values[d.from].sub(&self.values[d.to.unwrap()]).multiple_of(&d.axial).is_none()
        })
    }
}

/// Thom class of a pre-halfspace, with the congruence relation checked on
/// every edge.
pub fn thom_class(g: &GkmGraph, h: &Halfspace) -> Result<ThomClass> {
    let len = g.lattice_len();
    let values = (0..g.num_vertices())
        .map(|v| match (h.contains_vertex(v), h.normal(v)) {
            (false, _) => LatticeVector::zero(len),
            (true, None) => g.residual(),
            (true, Some(n)) => g.axial(n).clone(),
        })
        .collect();
    let tau = ThomClass { values };
    match tau.congruence_failure(g) {
        Some(e) => Err(Error::CongruenceFailure { edge: g.dart_id(e).to_string() }),
        None => Ok(tau),
    }
}

/// The two halfspaces bounded by a hyperplane, in unspecified orientation.
///
/// Removes `V^L`, splits what remains into pieces (components of the
/// remaining vertices, edges joining two vertices of `L` outside `L`, and
/// legs at `V^L` outside `L`), and assigns each piece to the side of the
/// excluded-pair member that enters it. Sides are propagated along `L` by
/// the connection. Any inconsistency, or a failed axiom re-check on the
/// result, is reported as an assumption (1) violation.
pub fn halfspace_pair(g: &GkmGraph, pairs: &PairDecomposition, l: &Hyperplane) -> Result<(Halfspace, Halfspace)> {
    let fail = |check: &str, detail: String| Error::AssumptionOneViolation { hyperplane: l.name.clone(), check: check.into(), detail };
    let nd = g.darts().len();

    // Side labels of the excluded darts, propagated along L.
    let mut side: Vec<Option<bool>> = vec![None; nd];
    let first = l.vertices[0];
    let (a0, b0) = l.excluded[&first];
    side[a0] = Some(true);
    side[b0] = Some(false);
    let mut stack = vec![first];
    let mut visited = BTreeSet::from([first]);
    while let Some(v) = stack.pop() {
        let (a, b) = l.excluded[&v];
        for e in l.darts_at(g, v).collect::<Vec<_>>() {
            let Some(q) = g.dart(e).to else { continue };
            for d in [a, b] {
                let image = g.connection().apply(e, d);
                let label = side[d];
                match side[image] {
                    Some(s) if Some(s) != label => {
                        return Err(fail(
                            "orientation",
                            format!("the sides of the excluded pair are swapped along `{}`", g.dart_id(e)),
                        ))
                    }
                    _ => side[image] = label,
                }
            }
            if visited.insert(q) {
                stack.push(q);
            }
        }
    }

    // Union-find over pieces: items are darts and vertices (offset by nd).
    let mut parent: Vec<usize> = (0..nd + g.num_vertices()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (d, dart) in g.darts().iter().enumerate() {
        if l.contains_dart(d) {
            continue;
        }
        if !l.contains_vertex(dart.from) {
            union(&mut parent, d, nd + dart.from);
        }
        if let Some(o) = dart.opposite {
            union(&mut parent, d, o);
        }
    }

    let mut piece_side: Vec<Option<bool>> = vec![None; parent.len()];
    for (&v, &(a, b)) in &l.excluded {
        for d in [a, b] {
            let s = side[d].ok_or_else(|| fail("orientation", format!("vertex `{}` is not reached along L", g.vertex_id(v))))?;
            let r = find(&mut parent, d);
            match piece_side[r] {
                Some(t) if t != s => {
                    return Err(fail(
                        "two_sided_component",
                        format!("the region entered by `{}` is reachable from both sides of L", g.dart_id(d)),
                    ))
                }
                _ => piece_side[r] = Some(s),
            }
        }
    }

    let build = |want: bool, parent: &mut Vec<usize>| -> std::result::Result<Halfspace, String> {
        let mut in_vertex = vec![false; g.num_vertices()];
        let mut in_dart = vec![false; nd];
        for &v in &l.vertices {
            in_vertex[v] = true;
        }
        for &d in &l.darts {
            in_dart[d] = true;
        }
        for (v, inside) in in_vertex.iter_mut().enumerate() {
            if !l.contains_vertex(v) && piece_side[find(parent, nd + v)] == Some(want) {
                *inside = true;
            }
        }
        for (d, inside) in in_dart.iter_mut().enumerate() {
            if !l.contains_dart(d) && piece_side[find(parent, d)] == Some(want) {
                *inside = true;
            }
        }
        Halfspace::from_subgraph(g, in_vertex, in_dart)
    };
    let plus = build(true, &mut parent).map_err(|e| fail("pre_halfspace", e))?;
    let minus = build(false, &mut parent).map_err(|e| fail("pre_halfspace", e))?;

    for h in [&plus, &minus] {
        let boundary: Vec<usize> = h.boundary_vertices();
        if boundary != l.vertices {
            return Err(fail("boundary", "the boundary of a side is not exactly L".into()));
        }
        if h.components(g) != 1 {
            return Err(fail("connected", "a side is not connected".into()));
        }
        thom_class(g, h).map_err(|e| fail("thom_congruence", e.to_string()))?;
    }
    for v in 0..g.num_vertices() {
        if !plus.contains_vertex(v) && !minus.contains_vertex(v) {
            return Err(fail("cover", format!("vertex `{}` lies on neither side", g.vertex_id(v))));
        }
    }
    let expected = minus.clone();
    match plus.opposite_side(g, pairs) {
        Ok(o) if o == expected => {}
        _ => return Err(fail("opposite_side", "the two sides are not opposite to each other".into())),
    }
    Ok((plus, minus))
}
