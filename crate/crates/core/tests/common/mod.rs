//! Brute-force oracles for small graphs and random graph helpers.
#![allow(dead_code)]

pub mod props;

use rand::seq::SliceRandom;
use rand::Rng;
use slider_rigidity::{TypedGraph, VertexType};

/// A graph on at most 10 vertices with every induced edge set precomputed as
/// a bit mask over edge ids.
pub struct Small {
    pub n: usize,
    pub sliders: u32,
    pub edges: Vec<(usize, usize)>,
    inside: Vec<u64>,
}

fn ones(x: u64) -> i32 {
    x.count_ones() as i32
}

impl Small {
    pub fn new(g: &TypedGraph) -> Self {
        assert!(g.n() <= 10 && g.m() <= 64);
        let n = g.n();
        let sliders = (0..n)
            .filter(|&v| g.vertex_type(v) == VertexType::Slider)
            .fold(0u32, |acc, v| acc | 1 << v);
        let edges = g.edges().to_vec();
        let inside = (0..1u32 << n)
            .map(|s| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(u, v))| s >> u & 1 == 1 && s >> v & 1 == 1)
                    .fold(0u64, |acc, (e, _)| acc | 1 << e)
            })
            .collect();
        Small {
            n,
            sliders,
            edges,
            inside,
        }
    }

    pub fn all_edges(&self) -> u64 {
        if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    /// `2n' − max(n₁', 3)` for the vertex set `s`.
    pub fn bound(&self, s: u32) -> i32 {
        let k = s.count_ones() as i32;
        let n1 = (s & self.sliders).count_ones() as i32;
        2 * k - n1.max(3)
    }

    pub fn n1_of(&self, s: u32) -> usize {
        (s & self.sliders).count_ones() as usize
    }

    pub fn edges_in(&self, s: u32, set: u64) -> i32 {
        ones(set & self.inside[s as usize])
    }

    /// Every vertex subset with at least two vertices respects the bound.
    pub fn sparse(&self, set: u64) -> bool {
        (0..1u32 << self.n)
            .filter(|s| s.count_ones() >= 2)
            .all(|s| self.edges_in(s, set) <= self.bound(s))
    }

    pub fn laman_sparse(&self, set: u64) -> bool {
        (0..1u32 << self.n)
            .filter(|s| s.count_ones() >= 2)
            .all(|s| self.edges_in(s, set) <= 2 * s.count_ones() as i32 - 3)
    }

    /// Edges inside `s` of a minimally rigid graph on `s`.
    pub fn target(&self, s: u32) -> i32 {
        self.bound(s)
    }

    /// Size of a largest sparse subset of `set`, found by branch and bound.
    /// Stops early once `stop_at` is reached.
    pub fn max_sparse(&self, set: u64, stop_at: i32) -> i32 {
        let ids: Vec<usize> = (0..self.edges.len())
            .filter(|&e| set >> e & 1 == 1)
            .collect();
        let mut best = 0;
        self.branch(&ids, 0, 0, 0, stop_at, &mut best);
        best
    }

    fn fits(&self, chosen: u64, e: usize) -> bool {
        let (u, v) = self.edges[e];
        let pair = 1u32 << u | 1u32 << v;
        let with = chosen | 1 << e;
        (0..1u32 << self.n)
            .filter(|s| s & pair == pair)
            .all(|s| self.edges_in(s, with) <= self.bound(s))
    }

    fn branch(
        &self,
        ids: &[usize],
        at: usize,
        chosen: u64,
        count: i32,
        stop_at: i32,
        best: &mut i32,
    ) {
        if count > *best {
            *best = count;
        }
        if *best >= stop_at || at == ids.len() || count + (ids.len() - at) as i32 <= *best {
            return;
        }
        let e = ids[at];
        if self.fits(chosen, e) {
            self.branch(ids, at + 1, chosen | 1 << e, count + 1, stop_at, best);
        }
        self.branch(ids, at + 1, chosen, count, stop_at, best);
    }

    /// Induced subgraph on `s` contains a spanning minimally rigid graph.
    pub fn rigid_set(&self, s: u32) -> bool {
        match s.count_ones() {
            0 => false,
            1 => true,
            _ => {
                let t = self.target(s);
                self.max_sparse(self.inside[s as usize], t) == t
            }
        }
    }

    pub fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn is_rigid(&self) -> bool {
        self.rigid_set(self.full())
    }

    pub fn is_minimally_rigid(&self) -> bool {
        match self.n {
            0 => false,
            1 => true,
            _ => {
                self.sparse(self.all_edges()) && ones(self.all_edges()) == self.target(self.full())
            }
        }
    }

    pub fn rank(&self) -> i32 {
        self.max_sparse(self.all_edges(), i32::MAX)
    }

    /// Backtracking search for an orientation with in-degree caps 1 and 2.
    pub fn orientable(&self, set: u64) -> bool {
        let ids: Vec<usize> = (0..self.edges.len())
            .filter(|&e| set >> e & 1 == 1)
            .collect();
        let cap: Vec<u32> = (0..self.n)
            .map(|v| if self.sliders >> v & 1 == 1 { 1 } else { 2 })
            .collect();
        if ids.len() as u32 > cap.iter().sum::<u32>() {
            return false;
        }
        let mut load = vec![0u32; self.n];
        self.assign(&ids, 0, &cap, &mut load)
    }

    fn assign(&self, ids: &[usize], at: usize, cap: &[u32], load: &mut [u32]) -> bool {
        if at == ids.len() {
            return true;
        }
        let (u, v) = self.edges[ids[at]];
        for h in [u, v] {
            if load[h] < cap[h] {
                load[h] += 1;
                let ok = self.assign(ids, at + 1, cap, load);
                load[h] -= 1;
                if ok {
                    return true;
                }
            }
        }
        false
    }

    /// All rigid vertex sets with at least two vertices, as masks.
    pub fn rigid_blocks(&self) -> Vec<u32> {
        (0..1u32 << self.n)
            .filter(|s| s.count_ones() >= 2 && self.rigid_set(*s))
            .collect()
    }

    /// The inclusion-maximal rigid vertex set containing edge `e`, checked
    /// to be unique.
    pub fn block_of_edge(&self, e: usize, blocks: &[u32]) -> u32 {
        let (u, v) = self.edges[e];
        let pair = 1u32 << u | 1u32 << v;
        let holding: Vec<u32> = blocks
            .iter()
            .copied()
            .filter(|s| s & pair == pair)
            .collect();
        let maximal: Vec<u32> = holding
            .iter()
            .copied()
            .filter(|&s| !holding.iter().any(|&t| t != s && t & s == s))
            .collect();
        assert_eq!(maximal.len(), 1, "maximal rigid block of an edge is unique");
        maximal[0]
    }
}

pub fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn types_from_mask(n: usize, slider_mask: u32) -> Vec<VertexType> {
    (0..n)
        .map(|v| {
            if slider_mask >> v & 1 == 1 {
                VertexType::Slider
            } else {
                VertexType::Free
            }
        })
        .collect()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph on `n` vertices with the pairs selected by `edge_mask` (bits index
/// [`all_pairs`]).
pub fn graph_from_masks(n: usize, slider_mask: u32, edge_mask: u64) -> TypedGraph {
    let pairs = all_pairs(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| edge_mask >> k & 1 == 1)
        .map(|(_, &p)| p);
    TypedGraph::new(types_from_mask(n, slider_mask), edges).unwrap()
}

pub fn random_types(rng: &mut impl Rng, n: usize, q: f64) -> Vec<VertexType> {
    (0..n)
        .map(|_| {
            if rng.random::<f64>() < q {
                VertexType::Free
            } else {
                VertexType::Slider
            }
        })
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, q: f64) -> TypedGraph {
    let types = random_types(rng, n, q);
    let edges: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .filter(|_| rng.random::<f64>() < p)
        .collect();
    TypedGraph::new(types, edges).unwrap()
}

/// A random minimally rigid graph: a greedy basis of a complete typed graph
/// under a random edge order.
pub fn random_minimally_rigid(rng: &mut impl Rng, n: usize, q: f64) -> TypedGraph {
    let k = TypedGraph::complete(random_types(rng, n, q));
    let mut order: Vec<usize> = (0..k.m()).collect();
    order.shuffle(rng);
    let basis = slider_rigidity::rigidity::greedy_basis(&k, order);
    let keep: Vec<bool> = (0..k.m()).map(|e| basis.contains(&e)).collect();
    k.edge_subgraph(|e| keep[e])
}

/// Peels in the given vertex order, repeatedly scanning for the first light
/// vertex.
pub fn naive_core(g: &TypedGraph, order: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    loop {
        let light = order.iter().copied().find(|&v| {
            alive[v] && g.neighbors(v).filter(|&w| alive[w]).count() <= g.vertex_type(v).freedom()
        });
        match light {
            Some(v) => alive[v] = false,
            None => break,
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Accretion by repeated full scans.
pub fn naive_core_plus(g: &TypedGraph, core: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut member = vec![false; n];
    for &v in core {
        member[v] = true;
    }
    loop {
        let joiner = (0..n).find(|&v| {
            !member[v]
                && g.neighbors(v).filter(|&w| member[w]).count() >= g.vertex_type(v).freedom()
        });
        match joiner {
            Some(v) => member[v] = true,
            None => break,
        }
    }
    (0..n).filter(|&v| member[v]).collect()
}
