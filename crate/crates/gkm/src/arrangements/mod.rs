//! Built-in fixture graphs and the three-direction line arrangements
//! `L(k, l, m)`.

mod klm;

use std::fmt;
use std::str::FromStr;

pub use klm::{gen_klm, KlmSpec};

use crate::error::{Error, Result};
use crate::gkm_graph::{graph_from_file, load_graph, DartRecord, GkmGraph, GraphFile};

const FIG2_LEFT: &str = include_str!("../../fixtures/fig2_left.json");
const FIG2_RIGHT: &str = include_str!("../../fixtures/fig2_right.json");
const FIG7_PENTAGON: &str = include_str!("../../fixtures/fig7_pentagon.json");
const FIG8_LINE5: &str = include_str!("../../fixtures/fig8_line5.json");
const FIG11_SPHERE: &str = include_str!("../../fixtures/fig11_sphere.json");

/// Names of the built-in graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    Fig2Left,
    Fig2Right,
    Fig7Pentagon,
    Fig8Line5,
    Fig11Sphere,
    /// A single vertex with the `2n` legs of `T*Cⁿ`.
    LocalModel(usize),
}

impl FixtureId {
    /// The five graphs shipped as files.
    pub const FILES: [FixtureId; 5] =
        [FixtureId::Fig2Left, FixtureId::Fig2Right, FixtureId::Fig7Pentagon, FixtureId::Fig8Line5, FixtureId::Fig11Sphere];

    /// Canonical serialized text, when the fixture ships as a file.
    pub fn source(self) -> Option<&'static str> {
        match self {
            FixtureId::Fig2Left => Some(FIG2_LEFT),
            FixtureId::Fig2Right => Some(FIG2_RIGHT),
            FixtureId::Fig7Pentagon => Some(FIG7_PENTAGON),
            FixtureId::Fig8Line5 => Some(FIG8_LINE5),
            FixtureId::Fig11Sphere => Some(FIG11_SPHERE),
            FixtureId::LocalModel(_) => None,
        }
    }

    /// Whether both assumptions of the presentation theorem hold.
    pub fn satisfies_assumptions(self) -> bool {
        !matches!(self, FixtureId::Fig2Right | FixtureId::Fig11Sphere)
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Fig2Left => f.write_str("fig2_left"),
            FixtureId::Fig2Right => f.write_str("fig2_right"),
            FixtureId::Fig7Pentagon => f.write_str("fig7_pentagon"),
            FixtureId::Fig8Line5 => f.write_str("fig8_line5"),
            FixtureId::Fig11Sphere => f.write_str("fig11_sphere"),
            FixtureId::LocalModel(n) => write!(f, "local_model({n})"),
        }
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "fig2_left" => FixtureId::Fig2Left,
            "fig2_right" => FixtureId::Fig2Right,
            "fig7_pentagon" => FixtureId::Fig7Pentagon,
            "fig8_line5" => FixtureId::Fig8Line5,
            "fig11_sphere" => FixtureId::Fig11Sphere,
            _ => {
                let n = s
                    .strip_prefix("local_model(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("local_model:"))
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::UnknownFixture(s.to_string()))?;
                FixtureId::LocalModel(n)
            }
        };
        Ok(id)
    }
}

/// The built-in graph for `id`.
pub fn fixture(id: FixtureId) -> Result<GkmGraph> {
    match id.source() {
        Some(text) => load_graph(text),
        None => {
            let FixtureId::LocalModel(n) = id else { unreachable!("file fixtures have a source") };
            local_model(n)
        }
    }
}

/// Looks a fixture up by its textual id.
pub fn fixture_by_name(name: &str) -> Result<GkmGraph> {
    fixture(name.parse()?)
}

fn local_model(n: usize) -> Result<GkmGraph> {
    if n == 0 {
        return Err(Error::UnknownFixture("local_model(0)".into()));
    }
    let mut darts = Vec::new();
    for i in 0..n {
        let mut plus = vec![0; n + 1];
        plus[i] = 1;
        let mut minus = vec![0; n + 1];
        minus[i] = -1;
        minus[n] = 1;
        darts.push(leg(&format!("p.plus{}", i + 1), plus));
        darts.push(leg(&format!("p.minus{}", i + 1), minus));
    }
    let file = GraphFile { rank: n, vertices: vec!["p".into()], darts, connection: None, hints: Default::default(), note: None };
    graph_from_file(file)
}

fn leg(id: &str, axial: Vec<i64>) -> DartRecord {
    DartRecord { id: id.into(), from: "p".into(), to: None, opposite: None, axial }
}
