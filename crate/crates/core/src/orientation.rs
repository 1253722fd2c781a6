//! 1.5-orientations: orient edges so that every slider has in-degree at most
//! one and every free vertex in-degree at most two.
//!
//! Edges are inserted one at a time. An edge goes to an endpoint with spare
//! capacity (the lower id first) or, failing that, a breadth-first search
//! over reversible edges looks for a vertex with spare capacity and flips the
//! path leading to it, as in cuckoo insertion. When the search saturates, the
//! set of vertices it reached is closed under reversal and fully saturated,
//! so together with the rejected edge it spans more edges than its capacity:
//! that set is returned as a [`DenseWitness`].
//!
//! Orientable edge sets are the independent sets of a transversal matroid,
//! so inserting every edge and keeping those that fit yields a maximum
//! admissible orientation.

use std::collections::VecDeque;

use crate::typed_graph::{SubgraphCounts, TypedGraph};

/// Partial assignment of a head to each edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    head: Vec<Option<usize>>,
}

impl Orientation {
    /// No edge oriented.
    pub fn empty(m: usize) -> Self {
        Orientation {
            head: vec![None; m],
        }
    }

    pub fn from_heads(head: Vec<Option<usize>>) -> Self {
        Orientation { head }
    }

    pub fn head(&self, edge: usize) -> Option<usize> {
        self.head[edge]
    }

    pub fn heads(&self) -> &[Option<usize>] {
        &self.head
    }

    /// Number of oriented edges.
    pub fn len(&self) -> usize {
        self.head.iter().filter(|h| h.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_total(&self) -> bool {
        self.head.iter().all(Option::is_some)
    }

    pub fn in_degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for h in self.head.iter().flatten() {
            deg[*h] += 1;
        }
        deg
    }
}

/// Vertex set inducing more edges than its in-degree capacity
/// (`m' > n₁' + 2n₂'`), certifying that no 1.5-orientation exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseWitness {
    pub vertices: Vec<usize>,
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
}

impl DenseWitness {
    /// Recounts the induced subgraph of `g` on `vertices`.
    pub fn new(g: &TypedGraph, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let counts = SubgraphCounts::of(g, &vertices);
        DenseWitness {
            vertices,
            n1: counts.n1,
            n2: counts.n2,
            m: counts.m,
        }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn capacity(&self) -> usize {
        self.n1 + 2 * self.n2
    }

    /// Edges in excess of the capacity.
    pub fn excess(&self) -> usize {
        self.m.saturating_sub(self.capacity())
    }

    pub fn is_valid(&self) -> bool {
        self.m > self.capacity()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationOutcome {
    Orientable(Orientation),
    Dense(DenseWitness),
}

impl OrientationOutcome {
    pub fn is_orientable(&self) -> bool {
        matches!(self, OrientationOutcome::Orientable(_))
    }
}

/// Result of [`max_orientable_edges`].
#[derive(Debug, Clone)]
pub struct MaxOrientation {
    /// Maximum number of simultaneously orientable edges.
    pub size: usize,
    pub orientation: Orientation,
    /// Smallest witness met while inserting, if any edge was rejected.
    pub smallest_witness: Option<DenseWitness>,
}

impl MaxOrientation {
    /// Edges left unoriented, `m − M`.
    pub fn gap(&self) -> usize {
        self.orientation.heads().len() - self.size
    }
}

/// Orients every edge or returns a dense witness.
pub fn find_orientation(g: &TypedGraph) -> OrientationOutcome {
    let mut orienter = Orienter::new(g);
    for e in 0..g.m() {
        if let Err(reached) = orienter.insert(e) {
            return OrientationOutcome::Dense(DenseWitness::new(g, reached));
        }
    }
    OrientationOutcome::Orientable(orienter.into_orientation())
}

pub fn is_orientable(g: &TypedGraph) -> bool {
    find_orientation(g).is_orientable()
}

/// Maximum admissible orientation.
pub fn max_orientable_edges(g: &TypedGraph) -> MaxOrientation {
    let mut orienter = Orienter::new(g);
    let mut size = 0;
    let mut smallest: Option<Vec<usize>> = None;
    for e in 0..g.m() {
        match orienter.insert(e) {
            Ok(()) => size += 1,
            Err(reached) => {
                if smallest.as_ref().is_none_or(|s| reached.len() < s.len()) {
                    smallest = Some(reached);
                }
            }
        }
    }
    MaxOrientation {
        size,
        orientation: orienter.into_orientation(),
        smallest_witness: smallest.map(|v| DenseWitness::new(g, v)),
    }
}

/// True iff every oriented edge points at one of its endpoints and no vertex
/// exceeds its in-degree cap.
pub fn verify_orientation(g: &TypedGraph, o: &Orientation) -> bool {
    if o.heads().len() != g.m() {
        return false;
    }
    let mut indeg = vec![0usize; g.n()];
    for (e, h) in o.heads().iter().enumerate() {
        if let Some(h) = *h {
            let (u, v) = g.edge(e);
            if h != u && h != v {
                return false;
            }
            indeg[h] += 1;
        }
    }
    indeg
        .iter()
        .enumerate()
        .all(|(v, &d)| d <= g.vertex_type(v).freedom())
}

const ROOT: usize = usize::MAX;

/// Incremental 1.5-orientation over the edges of a fixed graph.
///
/// Only inserted edges are oriented; the rest stay unassigned. Used directly
/// by the rigidity module to maintain the orientation of a growing basis.
#[derive(Debug, Clone)]
pub struct Orienter {
    caps: Vec<u8>,
    ends: Vec<(usize, usize)>,
    head: Vec<Option<usize>>,
    in_edges: Vec<Vec<usize>>,
    // search scratch
    mark: Vec<u32>,
    stamp: u32,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Orienter {
    pub fn new(g: &TypedGraph) -> Self {
        let n = g.n();
        Orienter {
            caps: g.types().iter().map(|t| t.freedom() as u8).collect(),
            ends: g.edges().to_vec(),
            head: vec![None; g.m()],
            in_edges: vec![Vec::with_capacity(2); n],
            mark: vec![0; n],
            stamp: 0,
            parent: vec![ROOT; n],
            queue: VecDeque::new(),
        }
    }

    fn spare(&self, v: usize) -> bool {
        self.in_edges[v].len() < self.caps[v] as usize
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        !self.spare(v)
    }

    pub fn head(&self, e: usize) -> Option<usize> {
        self.head[e]
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    fn set_head(&mut self, e: usize, h: usize) {
        if let Some(old) = self.head[e] {
            let list = &mut self.in_edges[old];
            let pos = list
                .iter()
                .position(|&f| f == e)
                .expect("edge listed at its head");
            list.swap_remove(pos);
        }
        self.head[e] = Some(h);
        self.in_edges[h].push(e);
    }

    fn other_end(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.ends[e];
        if u == x {
            v
        } else {
            u
        }
    }

    /// Orients edge `e`, reorienting a shortest path if needed. On failure
    /// nothing changes and the saturated vertex set reached by the search is
    /// returned.
    pub fn insert(&mut self, e: usize) -> Result<(), Vec<usize>> {
        debug_assert!(self.head[e].is_none(), "edge {e} inserted twice");
        let (u, v) = self.ends[e];
        for r in [u, v] {
            if self.spare(r) {
                self.set_head(e, r);
                return Ok(());
            }
        }

        let stamp = self.next_stamp();
        self.queue.clear();
        for r in [u, v] {
            self.mark[r] = stamp;
            self.parent[r] = ROOT;
            self.queue.push_back(r);
        }
        let mut reached = vec![u, v];
        while let Some(x) = self.queue.pop_front() {
            for i in 0..self.in_edges[x].len() {
                let f = self.in_edges[x][i];
                let z = self.other_end(f, x);
                if self.mark[z] == stamp {
                    continue;
                }
                self.mark[z] = stamp;
                self.parent[z] = f;
                if self.spare(z) {
                    let root = self.flip_path(z);
                    self.set_head(e, root);
                    return Ok(());
                }
                reached.push(z);
                self.queue.push_back(z);
            }
        }
        reached.sort_unstable();
        Err(reached)
    }

    // Flips the search path ending at `z` and returns the root it started from.
    fn flip_path(&mut self, z: usize) -> usize {
        let mut cur = z;
        loop {
            let f = self.parent[cur];
            if f == ROOT {
                return cur;
            }
            let prev = self.head[f].expect("path edges are oriented");
            self.set_head(f, cur);
            cur = prev;
        }
    }

    /// Vertices lying in some tight set: every vertex from which no
    /// unsaturated vertex can be reached by following edges from head to
    /// tail. This is the largest vertex set spanning exactly as many
    /// inserted edges as its capacity.
    pub fn tight_vertices(&self) -> Vec<bool> {
        let n = self.caps.len();
        // can_free[x]: x can obtain a spare slot by a chain of reversals.
        let mut can_free = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| self.spare(v)).collect();
        for &v in &stack {
            can_free[v] = true;
        }
        // Out-lists (tail -> edges) for the reverse walk.
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, h) in self.head.iter().enumerate() {
            if let Some(h) = *h {
                out[self.other_end(e, h)].push(e);
            }
        }
        while let Some(z) = stack.pop() {
            for &f in &out[z] {
                let x = self.head[f].expect("oriented");
                if !can_free[x] {
                    can_free[x] = true;
                    stack.push(x);
                }
            }
        }
        can_free.into_iter().map(|f| !f).collect()
    }

    pub fn into_orientation(self) -> Orientation {
        Orientation { head: self.head }
    }
}
