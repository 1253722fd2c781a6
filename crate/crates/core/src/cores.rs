//! The 2.5-core and the 2.5+1.5-core.
//!
//! The 2.5-core is the largest induced subgraph in which sliders have
//! degree at least 2 and free vertices degree at least 3. The 2.5+1.5-core
//! grows it back by repeatedly adding sliders with an edge into the current
//! set and free vertices with two edges into it.

use std::collections::VecDeque;

use crate::typed_graph::{TypedGraph, VertexType};

/// One removal during peeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: usize,
    pub vertex_type: VertexType,
    /// Live degree at the moment of removal.
    pub degree: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoreResult {
    /// Sorted.
    pub core_vertices: Vec<usize>,
    /// Sorted.
    pub core_plus_vertices: Vec<usize>,
    pub n1_core: usize,
    pub n2_core: usize,
    pub m_core: usize,
    pub n_core_plus: usize,
    /// Removal sequence, empty unless requested.
    pub peel_trace: Vec<PeelStep>,
}

fn floor(ty: VertexType) -> usize {
    ty.freedom() + 1
}

/// Membership mask of the 2.5-core, optionally recording removals.
fn peel(g: &TypedGraph, mut trace: Option<&mut Vec<PeelStep>>) -> Vec<bool> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if degree[v] < floor(g.vertex_type(v)) {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        if let Some(t) = trace.as_deref_mut() {
            t.push(PeelStep {
                vertex: v,
                vertex_type: g.vertex_type(v),
                degree: degree[v],
            });
        }
        for w in g.neighbors(v) {
            if !alive[w] {
                continue;
            }
            degree[w] -= 1;
            if !queued[w] && degree[w] < floor(g.vertex_type(w)) {
                queued[w] = true;
                queue.push_back(w);
            }
        }
    }
    alive
}

/// Grows a vertex set by accretion. Leaves an empty set empty.
fn accrete(g: &TypedGraph, mut member: Vec<bool>) -> Vec<bool> {
    let n = g.n();
    let mut links = vec![0usize; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| member[v]).collect();
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if member[w] {
                continue;
            }
            links[w] += 1;
            if links[w] >= g.vertex_type(w).freedom() {
                member[w] = true;
                queue.push_back(w);
            }
        }
    }
    member
}

fn mask_to_set(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter(|&(_, &b)| b)
        .map(|(v, _)| v)
        .collect()
}

/// Vertices of the 2.5-core, sorted.
pub fn core_2_5(g: &TypedGraph) -> Vec<usize> {
    mask_to_set(&peel(g, None))
}

/// Vertices of the 2.5+1.5-core, sorted. Empty when the 2.5-core is.
pub fn core_plus(g: &TypedGraph) -> Vec<usize> {
    mask_to_set(&accrete(g, peel(g, None)))
}

/// Both cores with their counts. The peeling sequence is kept only when
/// `trace` is set.
pub fn core_stats(g: &TypedGraph, trace: bool) -> CoreResult {
    let mut steps = Vec::new();
    let core = peel(g, trace.then_some(&mut steps));
    let core_vertices = mask_to_set(&core);
    let n1_core = core_vertices
        .iter()
        .filter(|&&v| g.vertex_type(v) == VertexType::Slider)
        .count();
    let n2_core = core_vertices.len() - n1_core;
    let m_core = g.induced_edge_count(&core);
    let core_plus_vertices = mask_to_set(&accrete(g, core));
    CoreResult {
        n1_core,
        n2_core,
        m_core,
        n_core_plus: core_plus_vertices.len(),
        core_vertices,
        core_plus_vertices,
        peel_trace: steps,
    }
}
