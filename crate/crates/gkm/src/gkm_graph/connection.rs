use std::collections::BTreeMap;

use super::{Connection, GkmGraph};
use crate::error::{Error, Result};

/// Reconstructs the connection from the axial function alone: for every
/// edge `e`, the unique bijection with `∇_e(e) = ē` and
/// `α(d) - α(∇_e d) ∈ Z α(e)`. The stored connection is ignored.
pub fn derive_connection(g: &GkmGraph) -> Result<Connection> {
    let mut maps = BTreeMap::new();
    for e in g.edges() {
        let map = unique_bijection(g, e)?;
        let inverse: BTreeMap<usize, usize> = map.iter().map(|(&a, &b)| (b, a)).collect();
        maps.insert(e, map);
        maps.insert(g.dart(e).opposite.expect("edge dart"), inverse);
    }
    Ok(Connection::new(maps))
}

fn unique_bijection(g: &GkmGraph, e: usize) -> Result<BTreeMap<usize, usize>> {
    let edge = g.dart(e);
    let bar = edge.opposite.expect("edge dart");
    let source = g.darts_at(edge.from);
    let target = g.darts_at(edge.to.expect("edge dart"));
    let candidates: Vec<Vec<usize>> = source
        .iter()
        .map(|&d| {
            if d == e {
                vec![bar]
            } else {
                target
                    .iter()
                    .copied()
                    .filter(|&c| c != bar && g.axial(d).sub(g.axial(c)).multiple_of(&edge.axial).is_some())
                    .collect()
            }
        })
        .collect();
    if let Some(i) = candidates.iter().position(|c| c.is_empty()) {
        return Err(Error::NoValidConnection { edge: edge.id.clone(), dart: g.dart_id(source[i]).to_string() });
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::with_capacity(source.len());
    let mut used = vec![false; g.darts().len()];
    search(&candidates, &mut current, &mut used, &mut found);
    match found.len() {
        0 => Err(Error::NoValidConnection { edge: edge.id.clone(), dart: g.dart_id(source[0]).to_string() }),
        1 => Ok(source.iter().copied().zip(found.pop().unwrap()).collect()),
        _ => Err(Error::AmbiguousConnection { edge: edge.id.clone() }),
    }
}

/// Enumerates bijections compatible with `candidates`, stopping after two.
fn search(candidates: &[Vec<usize>], current: &mut Vec<usize>, used: &mut [bool], found: &mut Vec<Vec<usize>>) {
    if found.len() > 1 {
        return;
    }
    let i = current.len();
    if i == candidates.len() {
        found.push(current.clone());
        return;
    }
    for &c in &candidates[i] {
        if !used[c] {
            used[c] = true;
            current.push(c);
            search(candidates, current, used, found);
            current.pop();
            used[c] = false;
        }
    }
}

/// Per vertex, the matching of its darts into pairs `{ε⁺, ε⁻}` with
/// `α(ε⁺) + α(ε⁻) = x`. Within a pair the dart with the smaller id is `ε⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecomposition {
    pairs: Vec<Vec<(usize, usize)>>,
    partner: Vec<usize>,
}

impl PairDecomposition {
    /// Pairs at vertex `v`, ordered by their `ε⁺` id.
    pub fn pairs_at(&self, v: usize) -> &[(usize, usize)] {
        &self.pairs[v]
    }

    /// The other member of the pair containing `d`.
    pub fn partner(&self, d: usize) -> usize {
        self.partner[d]
    }

    /// Index within `pairs_at(v)` of the pair containing `d`.
    pub fn pair_index(&self, v: usize, d: usize) -> usize {
        self.pairs[v].iter().position(|&(a, b)| a == d || b == d).expect("dart belongs to vertex")
    }
}

/// Computes the pair decomposition and checks that every `∇_e` maps pairs
/// to pairs.
pub fn pair_decomposition(g: &GkmGraph) -> Result<PairDecomposition> {
    let x = g.residual();
    let mut partner = vec![usize::MAX; g.darts().len()];
    let mut pairs = Vec::with_capacity(g.num_vertices());
    for v in 0..g.num_vertices() {
        let at = g.darts_at(v);
        let mut vp = Vec::new();
        for &d in at {
            let want = x.sub(g.axial(d));
            let matches: Vec<usize> = at.iter().copied().filter(|&c| c != d && *g.axial(c) == want).collect();
            if matches.len() != 1 {
                return Err(Error::NoPartner { vertex: g.vertex_id(v).to_string(), dart: g.dart_id(d).to_string() });
            }
            partner[d] = matches[0];
            if d < matches[0] {
                vp.push((d, matches[0]));
            }
        }
        pairs.push(vp);
    }
    for &(a, b) in pairs.iter().flatten() {
        if partner[b] != a {
            let v = g.dart(a).from;
            return Err(Error::NoPartner { vertex: g.vertex_id(v).to_string(), dart: g.dart_id(b).to_string() });
        }
    }
    let decomposition = PairDecomposition { pairs, partner };
    for e in g.edge_darts() {
        for &(a, b) in decomposition.pairs_at(g.dart(e).from) {
            let (ia, ib) = (g.connection().apply(e, a), g.connection().apply(e, b));
            if decomposition.partner(ia) != ib {
                return Err(Error::PairNotPreserved { edge: g.dart_id(e).to_string() });
            }
        }
    }
    Ok(decomposition)
}
