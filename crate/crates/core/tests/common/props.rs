//! Structural properties shared by the property tests and the acceptance
//! run. Each check draws one random instance and reports a failure as text.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use slider_rigidity::cores::core_2_5;
use slider_rigidity::rigidity::{
    construct_minimally_rigid, edges_to_merge, greedy_basis, is_minimally_rigid, is_rigid,
    retype_to_slider,
};
use slider_rigidity::typed_graph::{induced_subgraph, sample_er, ErConfig};
use slider_rigidity::{TypedGraph, VertexType};

use super::{naive_core, random_graph, random_minimally_rigid, random_types, Small};

pub type Check = Result<(), String>;

fn edge_set_graph(k: &TypedGraph, set: &[usize]) -> TypedGraph {
    let keep: Vec<bool> = (0..k.m()).map(|e| set.contains(&e)).collect();
    k.edge_subgraph(|e| keep[e])
}

/// Two bases of a complete typed graph from random scan orders; every
/// element of the second can be swapped into the first.
pub fn basis_exchange(rng: &mut impl Rng) -> Check {
    let n = rng.random_range(2..=8);
    let q = rng.random::<f64>();
    let k = TypedGraph::complete(random_types(rng, n, q));
    let mut order: Vec<usize> = (0..k.m()).collect();
    order.shuffle(rng);
    let b1 = greedy_basis(&k, order.clone());
    order.shuffle(rng);
    let b2 = greedy_basis(&k, order);
    let small = Small::new(&k);
    for &e2 in b2.iter().filter(|e| !b1.contains(e)) {
        let found = b1.iter().filter(|e| !b2.contains(e)).any(|&e1| {
            let mut set: Vec<usize> = b1.iter().copied().filter(|&e| e != e1).collect();
            set.push(e2);
            let mask = set.iter().fold(0u64, |acc, &e| acc | 1 << e);
            let minimal = small.sparse(mask) && set.len() as i32 == small.target(small.full());
            if minimal != is_minimally_rigid(&edge_set_graph(&k, &set)) {
                panic!("library and oracle disagree on an exchanged basis of {k:?}");
            }
            minimal
        });
        if !found {
            return Err(format!(
                "no exchange partner for edge {e2} between bases {b1:?} and {b2:?} of {k:?}"
            ));
        }
    }
    Ok(())
}

/// A random sparse graph: a greedy basis of a random graph.
fn random_sparse(rng: &mut impl Rng, n: usize) -> TypedGraph {
    let (p, q) = (rng.random_range(0.3..0.9), rng.random::<f64>());
    let g = random_graph(rng, n, p, q);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let basis = greedy_basis(&g, order);
    edge_set_graph(&g, &basis)
}

/// Unions and intersections of overlapping rigid blocks are rigid blocks.
pub fn block_closure(rng: &mut impl Rng) -> Check {
    let n = rng.random_range(4..=8);
    let g = random_sparse(rng, n);
    let small = Small::new(&g);
    if !small.sparse(small.all_edges()) {
        return Err(format!("greedy basis is not sparse: {g:?}"));
    }
    let blocks = small.rigid_blocks();
    for (k, &a) in blocks.iter().enumerate() {
        for &b in &blocks[k + 1..] {
            let shared = (a & b).count_ones();
            let both_many_sliders = small.n1_of(a).min(small.n1_of(b)) >= 3;
            if shared >= 1 && both_many_sliders && small.n1_of(a & b) < 3 {
                return Err(format!(
                    "blocks {a:#b} and {b:#b} of {g:?} meet in fewer than 3 sliders"
                ));
            }
            let overlapping = shared >= 2 || (shared >= 1 && both_many_sliders);
            if overlapping && (!small.rigid_set(a | b) || !small.rigid_set(a & b)) {
                return Err(format!("blocks {a:#b} and {b:#b} of {g:?} not closed"));
            }
        }
    }
    Ok(())
}

/// Turning a free vertex of a minimally rigid graph into a slider keeps it
/// rigid, and minimally so when there are fewer than three sliders.
pub fn retype_keeps_rigidity(rng: &mut impl Rng) -> Check {
    let n = rng.random_range(2..=8);
    let q = rng.random_range(0.3..1.0);
    let g = random_minimally_rigid(rng, n, q);
    let free: Vec<usize> = (0..n)
        .filter(|&v| g.vertex_type(v) == VertexType::Free)
        .collect();
    let Some(&v) = free.choose(rng) else {
        return Ok(());
    };
    let h = retype_to_slider(&g, v).map_err(|e| e.to_string())?;
    let small = Small::new(&h);
    if !small.is_rigid() || !is_rigid(&h) {
        return Err(format!("retyping {v} of {g:?} loses rigidity"));
    }
    if g.type_counts().0 < 3 && !small.is_minimally_rigid() {
        return Err(format!(
            "retyping {v} of {g:?} with n1 < 3 is not minimally rigid"
        ));
    }
    Ok(())
}

/// In a rigid graph on at least three vertices, every vertex has degree at
/// least its number of degrees of freedom, and deleting a vertex of exactly
/// that degree leaves a rigid graph.
pub fn degree_and_removal(rng: &mut impl Rng) -> Check {
    let g = loop {
        let n = rng.random_range(3..=8);
        let (p, q) = (rng.random_range(0.4..0.9), rng.random::<f64>());
        let g = random_graph(rng, n, p, q);
        if is_rigid(&g) {
            break g;
        }
    };
    if !Small::new(&g).is_rigid() {
        return Err(format!("oracle disagrees on rigidity of {g:?}"));
    }
    for v in 0..g.n() {
        let need = g.vertex_type(v).freedom();
        if g.degree(v) < need {
            return Err(format!(
                "vertex {v} of rigid {g:?} has degree {}",
                g.degree(v)
            ));
        }
        if g.degree(v) == need {
            let rest: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
            let h = induced_subgraph(&g, &rest)
                .map_err(|e| e.to_string())?
                .graph;
            if !Small::new(&h).is_rigid() {
                return Err(format!("removing {v} from {g:?} loses rigidity"));
            }
        }
    }
    Ok(())
}

/// Peeling in `shuffles` random orders always yields the same core.
pub fn core_order_invariance(rng: &mut impl Rng, shuffles: usize) -> Check {
    let n = rng.random_range(50..=150);
    let g = sample_er(&ErConfig::new(
        n,
        rng.random_range(2.0..5.0),
        rng.random::<f64>(),
        rng.random(),
    ))
    .map_err(|e| e.to_string())?;
    let core = core_2_5(&g);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..shuffles {
        order.shuffle(rng);
        if naive_core(&g, &order) != core {
            return Err(format!("order {order:?} gives a different core"));
        }
    }
    Ok(())
}

/// Disjoint copies of two minimally rigid graphs, optionally glued at one
/// vertex of type `t`, joined by `k` random pairwise disjoint edges.
pub fn merged_pair(rng: &mut impl Rng, i: usize, j: usize, t: u8, k: usize) -> Option<TypedGraph> {
    let shared = usize::from(t > 0);
    // free vertices needed so that each side has k spare vertices and room
    // for a shared free vertex
    let free_needed = |sliders: usize| {
        let mut f = usize::from(t == 2);
        while sliders + f < (k + shared).max(2) {
            f += 1;
        }
        f
    };
    let (f1, f2) = (free_needed(i), free_needed(j));
    let r1 = construct_minimally_rigid(i, f1).ok()?;
    let r2 = construct_minimally_rigid(j, f2).ok()?;
    let (n1, n2) = (r1.n(), r2.n());
    if n1 + n2 - shared > 10 {
        return None;
    }
    // R2 vertex w maps to n1 + w, except the glued vertex
    let glue_r1 = match t {
        1 => Some(0),
        2 => Some(i),
        _ => None,
    };
    let glue_r2 = match t {
        1 => Some(0),
        2 => Some(j),
        _ => None,
    };
    let mut map = Vec::with_capacity(n2);
    let mut next = n1;
    for w in 0..n2 {
        if Some(w) == glue_r2 {
            map.push(glue_r1.unwrap());
        } else {
            map.push(next);
            next += 1;
        }
    }
    let mut types = r1.types().to_vec();
    for w in 0..n2 {
        if Some(w) != glue_r2 {
            types.push(r2.vertex_type(w));
        }
    }
    let mut edges: Vec<(usize, usize)> = r1.edges().to_vec();
    edges.extend(r2.edges().iter().map(|&(a, b)| (map[a], map[b])));
    let mut left: Vec<usize> = (0..n1).filter(|&v| Some(v) != glue_r1).collect();
    let mut right: Vec<usize> = (0..n2)
        .filter(|&w| Some(w) != glue_r2)
        .map(|w| map[w])
        .collect();
    left.shuffle(rng);
    right.shuffle(rng);
    edges.extend(left.iter().zip(&right).take(k).map(|(&a, &b)| (a, b)));
    TypedGraph::new(types, edges).ok()
}

/// Every valid `(i, j, t)` with `i, j ≤ 5`: adding the prescribed number of
/// disjoint cross edges makes the union rigid. Returns the number of cases
/// instantiated.
pub fn merge_table(rng: &mut impl Rng, draws: usize) -> Result<usize, String> {
    let mut cases = 0;
    for i in 0..=5 {
        for j in 0..=5 {
            for t in 0..=2u8 {
                let Ok(k) = edges_to_merge(i, j, t) else {
                    continue;
                };
                let mut built = false;
                for _ in 0..draws {
                    let Some(g) = merged_pair(rng, i, j, t, k) else {
                        break;
                    };
                    built = true;
                    if !is_rigid(&g) || !Small::new(&g).is_rigid() {
                        return Err(format!("({i}, {j}, {t}) with {k} edges not rigid: {g:?}"));
                    }
                }
                if built {
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}
