//! Sparsity, rigidity and rigid components for graphs with sliders.
//!
//! A graph is *sparse* when every subgraph on `n' ≥ 2` vertices has at most
//! `2n' − max(n₁', 3)` edges. Since `2n' − max(n₁', 3) = min(2n' − 3,
//! n₁' + 2n₂')`, sparsity is Laman sparsity together with
//! 1.5-orientability, and both halves are decided incrementally: the (2,3)
//! pebble game for the first, augmenting-path orientation for the second.
//! Sparse edge sets form a matroid whose bases are the minimally rigid
//! graphs, so greedy insertion computes the rank and a basis.

mod components;
mod construct;
mod pebble;

pub use components::{maximal_block_of_edge, rigid_components, RigidComponent, RigidDecomposition};
pub use construct::{construct_minimally_rigid, edges_to_merge, retype_to_slider};
pub use pebble::PebbleGame;

use crate::error::{Error, Result};
use crate::orientation::{is_orientable, Orienter};
use crate::typed_graph::TypedGraph;

/// Edge count of a minimally rigid graph with `n1` sliders and `n2` free
/// vertices: `n₁ + 2n₂ + min(0, n₁ − 3)`. Meaningful for `n1 + n2 ≥ 2`.
pub fn rigid_edge_count(n1: usize, n2: usize) -> i64 {
    let (n1, n2) = (n1 as i64, n2 as i64);
    n1 + 2 * n2 + (n1 - 3).min(0)
}

/// Every subgraph on at least two vertices has `m' ≤ 2n' − 3`.
pub fn is_laman_sparse(g: &TypedGraph) -> bool {
    let mut game = PebbleGame::new(g.n());
    g.edges().iter().all(|&(u, v)| game.try_add(u, v))
}

/// Every subgraph on at least two vertices has `m' ≤ 2n' − max(n₁', 3)`.
pub fn is_sparse(g: &TypedGraph) -> bool {
    is_laman_sparse(g) && is_orientable(g)
}

/// Sparse with exactly `n₁ + 2n₂ + min(0, n₁ − 3)` edges, or a single
/// vertex.
pub fn is_minimally_rigid(g: &TypedGraph) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        _ => {
            let (n1, n2) = g.type_counts();
            g.m() as i64 == rigid_edge_count(n1, n2) && is_sparse(g)
        }
    }
}

/// Has a minimally rigid spanning subgraph. The empty graph is not rigid.
pub fn is_rigid(g: &TypedGraph) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        _ => {
            let (n1, n2) = g.type_counts();
            let target = rigid_edge_count(n1, n2);
            g.m() as i64 >= target && greedy_basis(g, 0..g.m()).len() as i64 == target
        }
    }
}

/// Matroid rank and a basis (edge ids, ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub basis: Vec<usize>,
}

/// Rank of the edge set, scanning edges in canonical order.
pub fn rank(g: &TypedGraph) -> Result<RankResult> {
    rank_in_order(g, 0..g.m())
}

/// Rank of the edge set, scanning edges in the given order of edge ids.
pub fn rank_in_order(g: &TypedGraph, order: impl IntoIterator<Item = usize>) -> Result<RankResult> {
    if g.n() < 2 {
        return Err(Error::domain(format!(
            "rank needs at least two vertices, graph has {}",
            g.n()
        )));
    }
    let mut basis = greedy_basis(g, order);
    basis.sort_unstable();
    Ok(RankResult {
        rank: basis.len(),
        basis,
    })
}

/// Greedy independent set: keeps each edge whose addition leaves the kept
/// set sparse. Returns edge ids in scan order.
pub fn greedy_basis(g: &TypedGraph, order: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut state = BasisBuilder::new(g);
    for e in order {
        state.offer(e);
    }
    state.basis
}

/// Greedy basis construction keeping the pebble game and the orientation of
/// the accepted edges.
pub(crate) struct BasisBuilder<'g> {
    g: &'g TypedGraph,
    pub(crate) pebbles: PebbleGame,
    pub(crate) orienter: Orienter,
    pub(crate) basis: Vec<usize>,
    pub(crate) in_basis: Vec<bool>,
}

impl<'g> BasisBuilder<'g> {
    pub(crate) fn new(g: &'g TypedGraph) -> Self {
        BasisBuilder {
            g,
            pebbles: PebbleGame::new(g.n()),
            orienter: Orienter::new(g),
            basis: Vec::new(),
            in_basis: vec![false; g.m()],
        }
    }

    pub(crate) fn offer(&mut self, e: usize) -> bool {
        if self.in_basis[e] {
            return false;
        }
        let (u, v) = self.g.edge(e);
        // Failed orientation attempts leave the orienter untouched, and the
        // pebble game is only committed once both tests pass.
        if !self.pebbles.can_add(u, v) || self.orienter.insert(e).is_err() {
            return false;
        }
        self.pebbles.add(u, v);
        self.basis.push(e);
        self.in_basis[e] = true;
        true
    }
}
