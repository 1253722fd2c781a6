//! Simple undirected graphs whose vertices are either sliders (one degree of
//! freedom) or free points in the plane (two degrees of freedom).
//!
//! A [`TypedGraph`] is immutable once built. Edges are stored once, as
//! `(u, v)` with `u < v`, sorted lexicographically; an edge's position in
//! that order is its edge id, which the orientation and rigidity modules use
//! to index per-edge state.

mod io;
mod sample;

pub use io::{read_graph, write_graph};
pub use sample::{sample_er, ErConfig};

use crate::error::{Error, Result};

/// Kind of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    /// Type 1: a point constrained to a line.
    Slider,
    /// Type 2: a free point.
    Free,
}

impl VertexType {
    /// Degrees of freedom of an isolated vertex of this type; also the
    /// in-degree cap used by 1.5-orientations.
    pub fn freedom(self) -> usize {
        match self {
            VertexType::Slider => 1,
            VertexType::Free => 2,
        }
    }

    pub fn from_digit(c: char) -> Option<Self> {
        match c {
            '1' => Some(VertexType::Slider),
            '2' => Some(VertexType::Free),
            _ => None,
        }
    }

    pub fn digit(self) -> char {
        match self {
            VertexType::Slider => '1',
            VertexType::Free => '2',
        }
    }
}

/// A simple typed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedGraph {
    types: Vec<VertexType>,
    edges: Vec<(usize, usize)>,
    /// `adj[v]` holds `(neighbour, edge id)` pairs.
    adj: Vec<Vec<(usize, usize)>>,
}

impl TypedGraph {
    /// Builds a graph from vertex types and an edge list.
    ///
    /// Edges may be given in any order and orientation; they are normalized to
    /// `u < v` and sorted. Loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(
        types: Vec<VertexType>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = types.len();
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(types, list))
    }

    /// Graph with no edges.
    pub fn empty(types: Vec<VertexType>) -> Self {
        Self::from_canonical(types, Vec::new())
    }

    /// All vertices of one type, no edges.
    pub fn uniform(n: usize, ty: VertexType) -> Self {
        Self::empty(vec![ty; n])
    }

    /// Complete graph on `types.len()` vertices.
    pub fn complete(types: Vec<VertexType>) -> Self {
        let n = types.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(types, edges)
    }

    // `edges` must already be canonical: u < v, sorted, no duplicates.
    pub(crate) fn from_canonical(types: Vec<VertexType>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); types.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        TypedGraph { types, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.types.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_type(&self, v: usize) -> VertexType {
        self.types[v]
    }

    pub fn types(&self) -> &[VertexType] {
        &self.types
    }

    /// Canonical edge list; the index of an edge is its id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbour, edge id)` pairs incident to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// `(n₁, n₂)`: number of sliders and of free vertices.
    pub fn type_counts(&self) -> (usize, usize) {
        let n1 = self
            .types
            .iter()
            .filter(|&&t| t == VertexType::Slider)
            .count();
        (n1, self.n() - n1)
    }

    /// Total in-degree capacity `n₁ + 2n₂`.
    pub fn capacity(&self) -> usize {
        self.types.iter().map(|t| t.freedom()).sum()
    }

    /// Copy of the graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Self::new(self.types.clone(), edges)
    }

    /// Copy of the graph without edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let id = self.edge_id(u, v).ok_or(Error::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(id);
        Ok(Self::from_canonical(self.types.clone(), edges))
    }

    /// Copy of the graph keeping only the edges whose ids satisfy `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Self {
        let edges = (0..self.m())
            .filter(|&e| keep(e))
            .map(|e| self.edges[e])
            .collect();
        Self::from_canonical(self.types.clone(), edges)
    }

    /// Copy of the graph with vertex `v` given type `ty`.
    pub fn with_type(&self, v: usize, ty: VertexType) -> Result<Self> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        let mut types = self.types.clone();
        types[v] = ty;
        Ok(Self::from_canonical(types, self.edges.clone()))
    }

    /// Number of edges with both endpoints in `members` (a membership mask).
    pub fn induced_edge_count(&self, members: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| members[u] && members[v])
            .count()
    }
}

/// Result of [`induced_subgraph`]: the subgraph plus the vertex relabeling.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: TypedGraph,
    /// `new_to_old[i]` is the original id of subgraph vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is `Some(i)` when `v` was kept.
    pub old_to_new: Vec<Option<usize>>,
}

/// Subgraph induced by `vertices`, relabeled in increasing order of the
/// original ids. Repeated ids are ignored.
pub fn induced_subgraph(g: &TypedGraph, vertices: &[usize]) -> Result<Induced> {
    let n = g.n();
    let mut old_to_new = vec![None; n];
    let mut keep = Vec::with_capacity(vertices.len());
    for &v in vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        keep.push(v);
    }
    keep.sort_unstable();
    keep.dedup();
    for (i, &v) in keep.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    let types = keep.iter().map(|&v| g.vertex_type(v)).collect();
    // Relabeling is monotone, so the canonical order is preserved.
    let edges = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
        .collect();
    Ok(Induced {
        graph: TypedGraph::from_canonical(types, edges),
        new_to_old: keep,
        old_to_new,
    })
}

/// Per-type counts and edge count of the subgraph induced by a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubgraphCounts {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
}

impl SubgraphCounts {
    pub fn of(g: &TypedGraph, vertices: &[usize]) -> Self {
        let mut members = vec![false; g.n()];
        let mut counts = SubgraphCounts::default();
        for &v in vertices {
            if !members[v] {
                members[v] = true;
                match g.vertex_type(v) {
                    VertexType::Slider => counts.n1 += 1,
                    VertexType::Free => counts.n2 += 1,
                }
            }
        }
        counts.m = g.induced_edge_count(&members);
        counts
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn capacity(&self) -> usize {
        self.n1 + 2 * self.n2
    }
}
