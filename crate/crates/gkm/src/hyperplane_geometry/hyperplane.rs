use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::gkm_graph::{GkmGraph, PairDecomposition};

/// A hyperplane: a connected `(2n-2)`-valent subgraph closed under the
/// connection, obtained at each of its vertices by removing one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    /// User-facing name (`L1`, ... or a name from the graph hints).
    pub name: String,
    /// Member vertices, sorted.
    pub vertices: Vec<usize>,
    /// Member darts, sorted.
    pub darts: Vec<usize>,
    /// For each member vertex, the excluded pair `(ε⁺, ε⁻)`.
    pub excluded: BTreeMap<usize, (usize, usize)>,
}

impl Hyperplane {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.excluded.contains_key(&v)
    }

    pub fn contains_dart(&self, d: usize) -> bool {
        self.darts.binary_search(&d).is_ok()
    }

    /// Sort key that identifies the hyperplane independently of its name.
    pub fn key(&self, g: &GkmGraph) -> (Vec<String>, Vec<String>) {
        let mut vs: Vec<String> = self.vertices.iter().map(|&v| g.vertex_id(v).to_string()).collect();
        vs.sort();
        let mut ds: Vec<String> = self.darts.iter().map(|&d| g.dart_id(d).to_string()).collect();
        ds.sort();
        (vs, ds)
    }

    /// Darts of this hyperplane at vertex `v`.
    pub fn darts_at<'a>(&'a self, g: &'a GkmGraph, v: usize) -> impl Iterator<Item = usize> + 'a {
        g.darts_at(v).iter().copied().filter(move |&d| self.contains_dart(d))
    }
}

/// The unique hyperplane through `p` whose darts at `p` are all darts
/// except the pair `excluded`, built as the iterated ∇-closure.
pub fn hyperplane_through(g: &GkmGraph, pairs: &PairDecomposition, p: usize, excluded: (usize, usize)) -> Result<Hyperplane> {
    let (a, b) = excluded;
    if pairs.partner(a) != b || g.dart(a).from != p {
        return Err(Error::ClosureFailure {
            vertex: g.vertex_id(p).to_string(),
            detail: format!("`{}` and `{}` are not a pair at this vertex", g.dart_id(a), g.dart_id(b)),
        });
    }
    let mut members: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut excluded_at: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let start: BTreeSet<usize> = g.darts_at(p).iter().copied().filter(|&d| d != a && d != b).collect();
    members.insert(p, start);
    excluded_at.insert(p, (a.min(b), a.max(b)));
    let mut queue = VecDeque::from([p]);
    while let Some(v) = queue.pop_front() {
        let here = members[&v].clone();
        for &e in &here {
            let Some(q) = g.dart(e).to else { continue };
            let image: BTreeSet<usize> = here.iter().map(|&d| g.connection().apply(e, d)).collect();
            let rest: Vec<usize> = g.darts_at(q).iter().copied().filter(|d| !image.contains(d)).collect();
            let is_pair = rest.len() == 2 && pairs.partner(rest[0]) == rest[1];
            if !is_pair {
                return Err(Error::ClosureFailure {
                    vertex: g.vertex_id(q).to_string(),
                    detail: "the transported dart set is not the complement of one pair".into(),
                });
            }
            match members.get(&q) {
                Some(existing) if *existing != image => {
                    return Err(Error::ClosureFailure {
                        vertex: g.vertex_id(q).to_string(),
                        detail: "two transports disagree on the dart set".into(),
                    });
                }
                Some(_) => {}
                None => {
                    members.insert(q, image);
                    excluded_at.insert(q, (rest[0], rest[1]));
                    queue.push_back(q);
                }
            }
        }
    }
    let vertices: Vec<usize> = members.keys().copied().collect();
    let mut darts: Vec<usize> = members.values().flatten().copied().collect();
    darts.sort_unstable();
    Ok(Hyperplane { name: String::new(), vertices, darts, excluded: excluded_at })
}

/// Every hyperplane of `g`, deduplicated, named, and sorted by name.
///
/// Without hints the hyperplanes are ordered by their sorted vertex-id
/// list (then dart-id list) and named `L1..Lm`. Hinted names replace the
/// default names of the hyperplanes they identify; when hints are present
/// the list is sorted by name.
pub fn all_hyperplanes(g: &GkmGraph, pairs: &PairDecomposition) -> Result<Vec<Hyperplane>> {
    let mut found: Vec<Hyperplane> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 0..g.num_vertices() {
        for &pair in pairs.pairs_at(v) {
            if seen.contains(&(v, pair.0)) {
                continue;
            }
            let h = hyperplane_through(g, pairs, v, pair)?;
            for (&w, &(a, _)) in &h.excluded {
                seen.insert((w, a));
            }
            found.push(h);
        }
    }
    found.sort_by_cached_key(|h| h.key(g));
    for (i, h) in found.iter_mut().enumerate() {
        h.name = format!("L{}", i + 1);
    }
    let hints = &g.hints().hyperplanes;
    if !hints.is_empty() {
        let mut hinted: Vec<Option<&String>> = vec![None; found.len()];
        for (name, &d) in hints {
            let v = g.dart(d).from;
            let idx = found
                .iter()
                .position(|h| h.excluded.get(&v).is_some_and(|&(a, b)| a == d || b == d))
                .ok_or_else(|| Error::InvalidHint(format!("dart `{}` is not normal to any hyperplane", g.dart_id(d))))?;
            if let Some(prev) = hinted[idx] {
                return Err(Error::InvalidHint(format!("hyperplane named both {prev} and {name}")));
            }
            hinted[idx] = Some(name);
        }
        for (h, name) in found.iter_mut().zip(hinted) {
            if let Some(name) = name {
                h.name = name.clone();
            }
        }
        let names: BTreeSet<&str> = found.iter().map(|h| h.name.as_str()).collect();
        if names.len() != found.len() {
            return Err(Error::InvalidHint("hyperplane names are not unique".into()));
        }
        found.sort_by_cached_key(|h| natural_key(&h.name));
    }
    Ok(found)
}

/// Splits a trailing number off a name so that `X2 < X10`.
pub fn natural_key(name: &str) -> (String, u64, String) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, digits) = name.split_at(split);
    (prefix.to_string(), digits.parse().unwrap_or(0), name.to_string())
}
