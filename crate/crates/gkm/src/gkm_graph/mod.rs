//! Graphs with legs, axial functions and connections.

mod connection;
mod io;
mod validate;

use std::collections::{BTreeMap, HashMap};

pub use connection::{derive_connection, pair_decomposition, PairDecomposition};
pub use io::{graph_from_file, load_graph, serialize_graph, DartRecord, GraphFile, HintsRecord};
pub use validate::{validate_axial, CheckResult, ValidationReport};

use crate::exact_algebra::LatticeVector;

/// A half-edge. Edges contribute two darts; a leg has no target and no
/// opposite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dart {
    pub id: String,
    pub from: usize,
    pub to: Option<usize>,
    pub opposite: Option<usize>,
    pub axial: LatticeVector,
}

impl Dart {
    pub fn is_leg(&self) -> bool {
        self.opposite.is_none()
    }
}

/// For every edge dart `e`, a bijection from the darts at `i(e)` to the
/// darts at `t(e)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Connection {
    maps: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl Connection {
    pub fn new(maps: BTreeMap<usize, BTreeMap<usize, usize>>) -> Self {
        Connection { maps }
    }

    /// `∇_edge(dart)`.
    pub fn apply(&self, edge: usize, dart: usize) -> usize {
        self.maps[&edge][&dart]
    }

    pub fn map(&self, edge: usize) -> &BTreeMap<usize, usize> {
        &self.maps[&edge]
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.maps.keys().copied()
    }
}

/// Optional metadata carried by a graph file: user-facing hyperplane names
/// with an orientation, and a preferred facet order for shelling.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hints {
    /// Hyperplane name to a dart index. The dart is the normal `n^H(p)` of
    /// the positive halfspace at its source vertex `p`; it determines both
    /// the hyperplane and its orientation.
    pub hyperplanes: BTreeMap<String, usize>,
    /// Vertex indices in preferred shelling order.
    pub shelling: Option<Vec<usize>>,
}

/// A regular `2n`-valent graph with legs, an axial function into
/// `Z^n ⊕ Z x` and a connection. Vertices and darts are stored sorted by
/// id, so index order is id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmGraph {
    rank: usize,
    vertex_ids: Vec<String>,
    darts: Vec<Dart>,
    darts_at: Vec<Vec<usize>>,
    connection: Connection,
    hints: Hints,
    note: Option<String>,
    vertex_index: HashMap<String, usize>,
    dart_index: HashMap<String, usize>,
}

impl GkmGraph {
    /// The torus rank `n`; every vertex has `2n` darts.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Length of axial vectors, `n + 1`.
    pub fn lattice_len(&self) -> usize {
        self.rank + 1
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn dart(&self, d: usize) -> &Dart {
        &self.darts[d]
    }

    pub fn dart_id(&self, d: usize) -> &str {
        &self.darts[d].id
    }

    pub fn dart_by_id(&self, id: &str) -> Option<usize> {
        self.dart_index.get(id).copied()
    }

    pub fn axial(&self, d: usize) -> &LatticeVector {
        &self.darts[d].axial
    }

    /// Darts starting at `v`, in id order.
    pub fn darts_at(&self, v: usize) -> &[usize] {
        &self.darts_at[v]
    }

    /// Edge darts, each edge listed once through its smaller dart index.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().enumerate().filter(|(i, d)| d.opposite.is_some_and(|o| *i < o)).map(|(i, _)| i)
    }

    /// All edge darts (both orientations).
    pub fn edge_darts(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().enumerate().filter(|(_, d)| !d.is_leg()).map(|(i, _)| i)
    }

    pub fn num_legs(&self) -> usize {
        self.darts.iter().filter(|d| d.is_leg()).count()
    }

    pub fn connection(&self) -> &Connection {
        &self.connection
    }

    pub fn hints(&self) -> &Hints {
        &self.hints
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// The residual basis vector `x`.
    pub fn residual(&self) -> LatticeVector {
        LatticeVector::residual(self.lattice_len())
    }

    /// Same graph with a replaced axial function, re-checked structurally.
    /// The stored connection is kept as is.
    pub fn with_axial(&self, axial: Vec<LatticeVector>) -> crate::Result<GkmGraph> {
        let mut file = io::to_file(self);
        for (rec, a) in file.darts.iter_mut().zip(axial) {
            rec.axial = a.coords().to_vec();
        }
        io::from_file(file)
    }

    /// Same graph without its stored connection, for derivation tests.
    pub fn without_connection(&self) -> GkmGraph {
        GkmGraph { connection: Connection::default(), ..self.clone() }
    }

    /// Same graph with a different connection (unchecked; run
    /// [`validate_axial`] to check it).
    pub fn with_connection(&self, connection: Connection) -> GkmGraph {
        GkmGraph { connection, ..self.clone() }
    }
}

/// The x-forgetful labels `α̃ = F ∘ α` on the same graph and connection.
/// The result is not a GKM graph: `α̃(ε⁺) = -α̃(ε⁻)` on every pair.
#[derive(Clone, Debug)]
pub struct ForgetfulGraph<'a> {
    pub graph: &'a GkmGraph,
    labels: Vec<LatticeVector>,
}

impl<'a> ForgetfulGraph<'a> {
    pub fn new(graph: &'a GkmGraph) -> Self {
        ForgetfulGraph { graph, labels: graph.darts.iter().map(|d| d.axial.forget()).collect() }
    }

    pub fn label(&self, d: usize) -> &LatticeVector {
        &self.labels[d]
    }

    pub fn labels(&self) -> &[LatticeVector] {
        &self.labels
    }

    /// Always false; recorded so that callers cannot mistake the labelled
    /// graph for a GKM graph.
    pub fn is_gkm(&self) -> bool {
        false
    }
}

/// The x-forgetful graph of `g`.
pub fn forgetful_graph(g: &GkmGraph) -> ForgetfulGraph<'_> {
    ForgetfulGraph::new(g)
}
