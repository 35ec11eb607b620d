use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gkm_graph::{graph_from_file, DartRecord, GkmGraph, GraphFile, HintsRecord};

/// Counts of horizontal, vertical and diagonal lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KlmSpec {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl KlmSpec {
    pub fn new(k: usize, l: usize, m: usize) -> Result<KlmSpec> {
        if k == 0 || l == 0 || m == 0 {
            return Err(Error::Structural(format!("line counts must be positive, got ({k}, {l}, {m})")));
        }
        Ok(KlmSpec { k, l, m })
    }

    pub fn num_vertices(&self) -> usize {
        self.k * self.l + self.k * self.m + self.l * self.m
    }
}

/// One direction family of lines.
struct Family {
    /// Forgetful label of the positive direction, in `(e1*, e2*)`.
    beta: [i64; 2],
    /// x-coefficient of the positive dart at the first vertex of a line.
    offset: i64,
    forward: &'static str,
    backward: &'static str,
}

/// The T*C²-modeled graph of the arrangement with `k` horizontal lines
/// `Y = r - k - 1`, `l` vertical lines `X = s - l - 1` and `m` diagonal
/// lines `X + Y = t - 1`.
///
/// A step `(dX, dY)` carries the forgetful label `dY e1* + dX e2*`. Along
/// every line the dart in the positive direction (right, up, down-right)
/// at the `i`-th vertex has x-coefficient `c + i` and its partner carries
/// the x-complement, with `c = 0` for horizontal and vertical lines and
/// `c = 1 - k` for diagonal ones. The graph carries hints naming the lines
/// `X1..Xk`, `Y1..Yl`, `Z1..Zm` and the facet order
/// `X_rY_1..X_rY_l, X_rZ_1..X_rZ_m` for each `r`, then `Y_sZ_1..Y_sZ_m`.
pub fn gen_klm(spec: KlmSpec) -> Result<GkmGraph> {
    let KlmSpec { k, l, m } = KlmSpec::new(spec.k, spec.l, spec.m)?;
    let (ki, li) = (k as i64, l as i64);
    let hor = Family { beta: [0, 1], offset: 0, forward: "right", backward: "left" };
    let vir = Family { beta: [1, 0], offset: 0, forward: "up", backward: "down" };
    let dia = Family { beta: [-1, 1], offset: 1 - ki, forward: "downright", backward: "upleft" };

    // Vertex id to coordinates, and per line the member vertices.
    let mut points: BTreeMap<String, (i64, i64)> = BTreeMap::new();
    let mut lines: BTreeMap<(char, usize), Vec<String>> = BTreeMap::new();
    let mut add = |a: (char, usize), b: (char, usize), xy: (i64, i64)| {
        let id = format!("{}{}{}{}", a.0, a.1, b.0, b.1);
        points.insert(id.clone(), xy);
        lines.entry(a).or_default().push(id.clone());
        lines.entry(b).or_default().push(id);
    };
    for r in 1..=k {
        let y = r as i64 - ki - 1;
        for s in 1..=l {
            add(('X', r), ('Y', s), (s as i64 - li - 1, y));
        }
        for t in 1..=m {
            add(('X', r), ('Z', t), (t as i64 - 1 - y, y));
        }
    }
    for s in 1..=l {
        let x = s as i64 - li - 1;
        for t in 1..=m {
            add(('Y', s), ('Z', t), (x, t as i64 - 1 - x));
        }
    }

    let mut darts = Vec::new();
    for ((prefix, _), members) in &mut lines {
        let family = match prefix {
            'X' => &hor,
            'Y' => &vir,
            _ => &dia,
        };
        match prefix {
            'Y' => members.sort_by_key(|v| points[v].1),
            _ => members.sort_by_key(|v| points[v].0),
        }
        line_darts(&mut darts, family, members);
    }

    let mut hyperplanes = BTreeMap::new();
    for r in 1..=k {
        hyperplanes.insert(format!("X{r}"), format!("X{r}Y1.up"));
    }
    for s in 1..=l {
        hyperplanes.insert(format!("Y{s}"), format!("X1Y{s}.right"));
    }
    for t in 1..=m {
        hyperplanes.insert(format!("Z{t}"), format!("X1Z{t}.left"));
    }
    let mut shelling = Vec::new();
    for r in 1..=k {
        shelling.extend((1..=l).map(|s| format!("X{r}Y{s}")));
        shelling.extend((1..=m).map(|t| format!("X{r}Z{t}")));
    }
    for s in 1..=l {
        shelling.extend((1..=m).map(|t| format!("Y{s}Z{t}")));
    }

    let file = GraphFile {
        rank: 2,
        vertices: points.keys().cloned().collect(),
        darts,
        connection: None,
        hints: HintsRecord { hyperplanes, shelling: Some(shelling) },
        note: Some(format!("line arrangement with k={k}, l={l}, m={m}")),
    };
    graph_from_file(file)
}

fn line_darts(darts: &mut Vec<DartRecord>, family: &Family, members: &[String]) {
    for (i, p) in members.iter().enumerate() {
        let a = family.offset + i as i64;
        let plus = vec![family.beta[0], family.beta[1], a];
        let minus = vec![-family.beta[0], -family.beta[1], 1 - a];
        let next = members.get(i + 1);
        let prev = i.checked_sub(1).map(|j| &members[j]);
        darts.push(DartRecord {
            id: format!("{p}.{}", family.forward),
            from: p.clone(),
            to: next.cloned(),
            opposite: next.map(|q| format!("{q}.{}", family.backward)),
            axial: plus,
        });
        darts.push(DartRecord {
            id: format!("{p}.{}", family.backward),
            from: p.clone(),
            to: prev.cloned(),
            opposite: prev.map(|q| format!("{q}.{}", family.forward)),
            axial: minus,
        });
    }
}
