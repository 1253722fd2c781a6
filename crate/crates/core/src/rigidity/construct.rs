//! Explicit minimally rigid graphs and the edge count for merging two
//! rigid components.

use crate::error::{Error, Result};
use crate::typed_graph::{TypedGraph, VertexType};

/// Returns `g` with the free vertex `v` turned into a slider.
pub fn retype_to_slider(g: &TypedGraph, v: usize) -> Result<TypedGraph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if g.vertex_type(v) != VertexType::Free {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} is already a slider"
        )));
    }
    g.with_type(v, VertexType::Slider)
}

/// A minimally rigid graph with `n1` sliders (ids `0..n1`) and `n2` free
/// vertices (ids `n1..n1 + n2`).
///
/// The sliders form a cycle (an edge for two, nothing for one). Free
/// vertices are then added one at a time, each joined to slider 0 (vertex 0
/// when there are no sliders) and to the vertex added just before it.
/// Adding a free vertex of degree two raises both the edge count and every
/// subgraph bound by two, so sparsity and tightness carry over.
pub fn construct_minimally_rigid(n1: usize, n2: usize) -> Result<TypedGraph> {
    if n1 + n2 < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least two vertices, got n1 = {n1}, n2 = {n2}"
        )));
    }
    let n = n1 + n2;
    let mut types = vec![VertexType::Slider; n1];
    types.resize(n, VertexType::Free);
    let mut edges = cycle(0, n1);
    for w in n1.max(1)..n {
        edges.push((0, w));
        if w >= 2 {
            edges.push((w - 1, w));
        }
    }
    TypedGraph::new(types, edges)
}

// Cycle on `start..start + len`; a single edge for two vertices, nothing
// for fewer.
fn cycle(start: usize, len: usize) -> Vec<(usize, usize)> {
    match len {
        0 | 1 => Vec::new(),
        2 => vec![(start, start + 1)],
        _ => (0..len)
            .map(|k| (start + k, start + (k + 1) % len))
            .collect(),
    }
}

/// Number of pairwise disjoint edges between two rigid components that
/// makes their union rigid.
///
/// `i` and `j` are the slider counts of the two components. `t` encodes
/// their intersection: 0 when disjoint, otherwise the type (1 or 2) of the
/// shared vertex.
pub fn edges_to_merge(i: usize, j: usize, t: u8) -> Result<usize> {
    let invalid = |why: &str| {
        Err(Error::InvalidParameter(format!(
            "edges_to_merge({i}, {j}, {t}): {why}"
        )))
    };
    if t > 2 {
        return invalid("shared-vertex code must be 0, 1 or 2");
    }
    if t == 1 && i.min(j) == 0 {
        return invalid("a shared slider is counted in both components");
    }
    let (hi, lo) = (i.max(j), i.min(j));
    if hi >= 3 && lo == 2 && t == 2 {
        return invalid("two components with these slider counts cannot share a free vertex");
    }
    let t = t as usize;
    let count = if lo >= 3 {
        0
    } else if hi >= 3 {
        3 - lo - t
    } else if i + j >= 3 {
        6 - i - j - t
    } else {
        3 - t
    };
    Ok(count)
}
