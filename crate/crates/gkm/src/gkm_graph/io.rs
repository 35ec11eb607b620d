use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{derive_connection, Connection, Dart, GkmGraph, Hints};
use crate::error::{Error, Result};
use crate::exact_algebra::{LatticeVector, MAX_COORD};

/// On-disk graph record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub darts: Vec<DartRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "HintsRecord::is_empty")]
    pub hints: HintsRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DartRecord {
    pub id: String,
    pub from: String,
    pub to: Option<String>,
    pub opposite: Option<String>,
    pub axial: Vec<i64>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HintsRecord {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub hyperplanes: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shelling: Option<Vec<String>>,
}

impl HintsRecord {
    fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty() && self.shelling.is_none()
    }
}

/// Parses and structurally checks a graph. A missing connection is derived
/// from the axial function.
pub fn load_graph(text: &str) -> Result<GkmGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_file(file)
}

/// Canonical JSON: sorted keys, arrays in id order, explicit connection.
pub fn serialize_graph(g: &GkmGraph) -> String {
    let value = serde_json::to_value(to_file(g)).expect("graph records serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
    s.push('\n');
    s
}

pub(super) fn to_file(g: &GkmGraph) -> GraphFile {
    let darts = g
        .darts
        .iter()
        .map(|d| DartRecord {
            id: d.id.clone(),
            from: g.vertex_ids[d.from].clone(),
            to: d.to.map(|t| g.vertex_ids[t].clone()),
            opposite: d.opposite.map(|o| g.darts[o].id.clone()),
            axial: d.axial.coords().to_vec(),
        })
        .collect();
    let connection = g
        .connection
        .maps
        .iter()
        .map(|(e, m)| (g.darts[*e].id.clone(), m.iter().map(|(a, b)| (g.darts[*a].id.clone(), g.darts[*b].id.clone())).collect()))
        .collect();
    let hints = HintsRecord {
        hyperplanes: g.hints.hyperplanes.iter().map(|(n, d)| (n.clone(), g.darts[*d].id.clone())).collect(),
        shelling: g.hints.shelling.as_ref().map(|s| s.iter().map(|&v| g.vertex_ids[v].clone()).collect()),
    };
    GraphFile { rank: g.rank, vertices: g.vertex_ids.clone(), darts, connection: Some(connection), hints, note: g.note.clone() }
}

fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

/// Structurally checks an in-memory graph record, as [`load_graph`] does.
pub fn graph_from_file(file: GraphFile) -> Result<GkmGraph> {
    from_file(file)
}

pub(super) fn from_file(file: GraphFile) -> Result<GkmGraph> {
    let n = file.rank;
    if n == 0 {
        return Err(structural("rank must be at least 1"));
    }
    let mut vertex_ids = file.vertices.clone();
    vertex_ids.sort();
    if let Some(w) = vertex_ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(structural(format!("duplicate vertex id `{}`", w[0])));
    }
    if vertex_ids.is_empty() {
        return Err(structural("graph has no vertices"));
    }
    let vertex_index: HashMap<String, usize> = vertex_ids.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();

    let mut records = file.darts;
    records.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = records.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(structural(format!("duplicate dart id `{}`", w[0].id)));
    }
    let dart_index: HashMap<String, usize> = records.iter().enumerate().map(|(i, d)| (d.id.clone(), i)).collect();
    let lookup_vertex = |id: &str, dart: &str| {
        vertex_index.get(id).copied().ok_or_else(|| structural(format!("dart `{dart}` refers to unknown vertex `{id}`")))
    };

    let mut darts = Vec::with_capacity(records.len());
    for rec in &records {
        if rec.axial.len() != n + 1 {
            return Err(structural(format!("dart `{}` has axial length {}, expected {}", rec.id, rec.axial.len(), n + 1)));
        }
        if rec.axial.iter().any(|c| c.abs() > MAX_COORD) {
            return Err(structural(format!("dart `{}` has an axial coordinate beyond ±2^40", rec.id)));
        }
        let from = lookup_vertex(&rec.from, &rec.id)?;
        let to = rec.to.as_deref().map(|t| lookup_vertex(t, &rec.id)).transpose()?;
        let opposite = match &rec.opposite {
            Some(o) => Some(
                dart_index.get(o).copied().ok_or_else(|| structural(format!("dart `{}` has dangling opposite `{o}`", rec.id)))?,
            ),
            None => None,
        };
        if to.is_some() != opposite.is_some() {
            return Err(structural(format!("dart `{}`: an edge needs both a target and an opposite, a leg neither", rec.id)));
        }
        darts.push(Dart { id: rec.id.clone(), from, to, opposite, axial: LatticeVector::new(rec.axial.clone()) });
    }
    for (i, d) in darts.iter().enumerate() {
        if let Some(o) = d.opposite {
            let od = &darts[o];
            if o == i || od.opposite != Some(i) || od.from != d.to.unwrap() || od.to != Some(d.from) {
                return Err(structural(format!("darts `{}` and `{}` are not mutually opposite", d.id, od.id)));
            }
        }
    }
    let mut darts_at = vec![Vec::new(); vertex_ids.len()];
    for (i, d) in darts.iter().enumerate() {
        darts_at[d.from].push(i);
    }
    for (v, ds) in darts_at.iter().enumerate() {
        if ds.len() != 2 * n {
            return Err(structural(format!("vertex `{}` has valence {}, expected {}", vertex_ids[v], ds.len(), 2 * n)));
        }
    }
    check_connected(&vertex_ids, &darts, &darts_at)?;

    let hints = resolve_hints(&file.hints, &vertex_index, &dart_index)?;
    let mut g = GkmGraph {
        rank: n,
        vertex_ids,
        darts,
        darts_at,
        connection: Connection::default(),
        hints,
        note: file.note,
        vertex_index,
        dart_index,
    };
    g.connection = match file.connection {
        Some(raw) => parse_connection(&g, &raw)?,
        None => derive_connection(&g)?,
    };
    Ok(g)
}

fn check_connected(vertex_ids: &[String], darts: &[Dart], darts_at: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; vertex_ids.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &d in &darts_at[v] {
            if let Some(t) = darts[d].to {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    match seen.iter().position(|s| !s) {
        Some(v) => Err(structural(format!("graph is disconnected: vertex `{}` is unreachable", vertex_ids[v]))),
        None => Ok(()),
    }
}

fn resolve_hints(raw: &HintsRecord, vertex_index: &HashMap<String, usize>, dart_index: &HashMap<String, usize>) -> Result<Hints> {
    let mut hyperplanes = BTreeMap::new();
    for (name, dart) in &raw.hyperplanes {
        let d = dart_index.get(dart).ok_or_else(|| Error::InvalidHint(format!("hyperplane {name} names unknown dart `{dart}`")))?;
        hyperplanes.insert(name.clone(), *d);
    }
    let shelling = match &raw.shelling {
        Some(order) => {
            let vs = order
                .iter()
                .map(|v| vertex_index.get(v).copied().ok_or_else(|| Error::InvalidHint(format!("shelling names unknown vertex `{v}`"))))
                .collect::<Result<Vec<_>>>()?;
            let distinct: BTreeSet<usize> = vs.iter().copied().collect();
            if distinct.len() != vs.len() || vs.len() != vertex_index.len() {
                return Err(Error::InvalidHint("shelling order must list every vertex exactly once".into()));
            }
            Some(vs)
        }
        None => None,
    };
    Ok(Hints { hyperplanes, shelling })
}

fn parse_connection(g: &GkmGraph, raw: &BTreeMap<String, BTreeMap<String, String>>) -> Result<Connection> {
    let dart = |id: &str| g.dart_by_id(id).ok_or_else(|| structural(format!("connection refers to unknown dart `{id}`")));
    let mut maps = BTreeMap::new();
    for (edge_id, m) in raw {
        let e = dart(edge_id)?;
        let Some(t) = g.darts[e].to else {
            return Err(structural(format!("connection given for leg `{edge_id}`")));
        };
        let mut map = BTreeMap::new();
        for (a, b) in m {
            map.insert(dart(a)?, dart(b)?);
        }
        let domain: BTreeSet<usize> = map.keys().copied().collect();
        let image: BTreeSet<usize> = map.values().copied().collect();
        let expected_domain: BTreeSet<usize> = g.darts_at(g.darts[e].from).iter().copied().collect();
        let expected_image: BTreeSet<usize> = g.darts_at(t).iter().copied().collect();
        if domain != expected_domain || image != expected_image || image.len() != map.len() {
            return Err(structural(format!("connection along `{edge_id}` is not a bijection between the endpoint dart sets")));
        }
        maps.insert(e, map);
    }
    for e in g.edge_darts() {
        if !maps.contains_key(&e) {
            return Err(structural(format!("connection is missing edge dart `{}`", g.darts[e].id)));
        }
    }
    Ok(Connection::new(maps))
}
