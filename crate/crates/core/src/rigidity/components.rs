//! Decomposition into rigid components.
//!
//! Rigid components of a graph coincide with those of any of its bases, so
//! the work happens on a greedy basis `B`. In a sparse graph a vertex set
//! with at least two vertices is a rigid block iff it is tight for one of
//! the two counts:
//!
//! * `|B[S]| = n₁ + 2n₂`, which forces `n₁(S) ≥ 3`. Unions of such sets are
//!   again such sets, so all of them merge into one component: the vertices
//!   that cannot free a slot in the orientation of `B`. It may be
//!   disconnected (two disjoint slider triangles form one component).
//! * `|B[S]| = 2|S| − 3`, which forces `n₁(S) ≤ 3`. These are the Laman
//!   components of `B`, read off the pebble game.
//!
//! An edge with both endpoints in the first kind of set belongs to it;
//! every other basis edge belongs to its Laman component. Edges outside the
//! basis fall inside the component holding both endpoints.

use super::BasisBuilder;
use crate::error::{Error, Result};
use crate::typed_graph::{TypedGraph, VertexType};

/// One rigid component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidComponent {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Sorted ids of all graph edges with both endpoints in `vertices`.
    pub edges: Vec<usize>,
    pub n1: usize,
    pub n2: usize,
    /// Whether the induced subgraph is connected.
    pub connected: bool,
    /// Vertex count of the largest connected piece of the induced subgraph.
    pub largest_piece: usize,
}

impl RigidComponent {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Unique partition of the edge set into rigid components, plus the
/// isolated vertices (each a component on its own).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidDecomposition {
    /// Components with at least one edge, ordered by smallest edge id.
    pub components: Vec<RigidComponent>,
    pub isolated: Vec<usize>,
    /// Component index of each edge.
    pub edge_component: Vec<usize>,
}

impl RigidDecomposition {
    /// Vertices covered by the largest rigid component (`R_n`).
    pub fn largest_size(&self) -> usize {
        let biggest = self
            .components
            .iter()
            .map(RigidComponent::size)
            .max()
            .unwrap_or(0);
        if biggest == 0 && !self.isolated.is_empty() {
            1
        } else {
            biggest
        }
    }

    /// Largest component whose induced subgraph is connected (`R_n^C`).
    pub fn largest_connected_size(&self) -> usize {
        let biggest = self
            .components
            .iter()
            .filter(|c| c.connected)
            .map(RigidComponent::size)
            .max()
            .unwrap_or(0);
        if biggest == 0 && !self.isolated.is_empty() {
            1
        } else {
            biggest
        }
    }

    /// Largest connected piece of any component. Each such piece is itself
    /// a connected rigid block.
    pub fn largest_piece_size(&self) -> usize {
        let biggest = self
            .components
            .iter()
            .map(|c| c.largest_piece)
            .max()
            .unwrap_or(0);
        if biggest == 0 && !self.isolated.is_empty() {
            1
        } else {
            biggest
        }
    }

    pub fn component_of_edge(&self, e: usize) -> &RigidComponent {
        &self.components[self.edge_component[e]]
    }
}

pub fn rigid_components(g: &TypedGraph) -> RigidDecomposition {
    let n = g.n();
    let m = g.m();
    let mut builder = BasisBuilder::new(g);
    for e in 0..m {
        builder.offer(e);
    }
    let tight = builder.orienter.tight_vertices();

    const UNASSIGNED: usize = usize::MAX;
    let mut edge_component = vec![UNASSIGNED; m];
    let mut vertex_sets: Vec<Vec<usize>> = Vec::new();
    // Component ids each vertex belongs to.
    let mut memberships: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pinned: Option<usize> = None;

    let basis = builder.basis.clone();
    for &e in &basis {
        if edge_component[e] != UNASSIGNED {
            continue;
        }
        let (u, v) = g.edge(e);
        if tight[u] && tight[v] {
            let id = *pinned.get_or_insert_with(|| {
                let id = vertex_sets.len();
                let members: Vec<usize> = (0..n).filter(|&w| tight[w]).collect();
                for &w in &members {
                    memberships[w].push(id);
                }
                vertex_sets.push(members);
                id
            });
            edge_component[e] = id;
            continue;
        }
        let mask = builder.pebbles.tight_set_of(u, v);
        let id = vertex_sets.len();
        let members: Vec<usize> = (0..n).filter(|&w| mask[w]).collect();
        for &w in &members {
            memberships[w].push(id);
            for &(x, f) in g.incident(w) {
                if w < x && mask[x] && builder.in_basis[f] {
                    debug_assert!(!(tight[w] && tight[x]));
                    edge_component[f] = id;
                }
            }
        }
        vertex_sets.push(members);
    }

    for (e, slot) in edge_component.iter_mut().enumerate() {
        if *slot != UNASSIGNED {
            continue;
        }
        let (u, v) = g.edge(e);
        let id = if tight[u] && tight[v] {
            pinned
        } else {
            memberships[u]
                .iter()
                .copied()
                .find(|&id| Some(id) != pinned && vertex_sets[id].binary_search(&v).is_ok())
        };
        *slot = id.expect("a dependent edge lies inside a rigid component of the basis");
    }

    let mut edge_lists: Vec<Vec<usize>> = vec![Vec::new(); vertex_sets.len()];
    for (e, &id) in edge_component.iter().enumerate() {
        edge_lists[id].push(e);
    }

    // Renumber components by smallest edge id for a stable order.
    let mut order: Vec<usize> = (0..vertex_sets.len()).collect();
    order.sort_by_key(|&id| edge_lists[id][0]);
    let mut new_id = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }
    let mut pieces = PieceCounter::new(n);
    let components = order
        .iter()
        .map(|&id| {
            let vertices = std::mem::take(&mut vertex_sets[id]);
            let edges = std::mem::take(&mut edge_lists[id]);
            let n1 = vertices
                .iter()
                .filter(|&&w| g.vertex_type(w) == VertexType::Slider)
                .count();
            let (count, largest_piece) = pieces.pieces(g, &vertices, &edges);
            RigidComponent {
                n2: vertices.len() - n1,
                n1,
                connected: count == 1,
                largest_piece,
                vertices,
                edges,
            }
        })
        .collect();
    for id in edge_component.iter_mut() {
        *id = new_id[*id];
    }
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).collect();
    RigidDecomposition {
        components,
        isolated,
        edge_component,
    }
}

/// Vertex set of the rigid component containing edge `e`.
pub fn maximal_block_of_edge(g: &TypedGraph, e: usize) -> Result<Vec<usize>> {
    if e >= g.m() {
        return Err(Error::domain(format!(
            "edge id {e} out of range (m = {})",
            g.m()
        )));
    }
    Ok(rigid_components(g).component_of_edge(e).vertices.clone())
}

/// Union–find scratch reused across components.
struct PieceCounter {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl PieceCounter {
    fn new(n: usize) -> Self {
        PieceCounter {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Number of connected pieces and size of the largest one.
    fn pieces(&mut self, g: &TypedGraph, vertices: &[usize], edges: &[usize]) -> (usize, usize) {
        let mut count = vertices.len();
        for &e in edges {
            let (u, v) = g.edge(e);
            let (a, b) = (self.find(u), self.find(v));
            if a != b {
                let (big, small) = if self.size[a] >= self.size[b] {
                    (a, b)
                } else {
                    (b, a)
                };
                self.parent[small] = big;
                self.size[big] += self.size[small];
                count -= 1;
            }
        }
        let largest = vertices.iter().map(|&w| {
            let r = self.find(w);
            self.size[r]
        });
        let largest = largest.max().unwrap_or(0);
        for &w in vertices {
            self.parent[w] = w;
            self.size[w] = 1;
        }
        (count, largest)
    }
}
