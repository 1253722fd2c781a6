//! Seeded Erdős–Rényi sampling of typed graphs.

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Geometric;
use serde::{Deserialize, Serialize};

use super::{TypedGraph, VertexType};
use crate::error::{Error, Result};

/// Above this many vertices, edges are drawn by geometric skipping instead of
/// one Bernoulli trial per vertex pair.
pub const DENSE_SAMPLING_MAX_N: usize = 20_000;

/// Parameters of `G(n, c/n)` with independent vertex types.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErConfig {
    pub n: usize,
    /// Mean-degree parameter; each pair is an edge with probability `c/n`.
    pub c: f64,
    /// Probability that a vertex is free (type 2).
    pub q: f64,
    pub seed: u64,
}

impl ErConfig {
    pub fn new(n: usize, c: f64, q: f64, seed: u64) -> Self {
        ErConfig { n, c, q, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c.is_finite() && self.c >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "c must be finite and >= 0, got {}",
                self.c
            )));
        }
        if !(0.0..=1.0).contains(&self.q) {
            return Err(Error::InvalidParameter(format!(
                "q must lie in [0, 1], got {}",
                self.q
            )));
        }
        Ok(())
    }

    /// Edge probability `min(c/n, 1)`.
    pub fn edge_probability(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            (self.c / self.n as f64).min(1.0)
        }
    }
}

/// Samples a typed `G(n, c/n)`.
///
/// Uses ChaCha8 seeded with `config.seed`, so a given configuration always
/// produces the same graph. Types are drawn first (vertex `i` free with
/// probability `q`), then edges.
pub fn sample_er(config: &ErConfig) -> Result<TypedGraph> {
    config.validate()?;
    let n = config.n;
    if n > 0 && config.c > n as f64 {
        warn!(
            "c/n = {}/{} exceeds 1, clamping edge probability to 1",
            config.c, n
        );
    }
    let p = config.edge_probability();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let types: Vec<VertexType> = (0..n)
        .map(|_| {
            if rng.random::<f64>() < config.q {
                VertexType::Free
            } else {
                VertexType::Slider
            }
        })
        .collect();

    let mut edges = Vec::new();
    if p >= 1.0 {
        edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
    } else if p > 0.0 {
        if n <= DENSE_SAMPLING_MAX_N {
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
        } else {
            skip_sample(n, p, &mut rng, &mut edges);
            edges.sort_unstable();
        }
    }
    Ok(TypedGraph::from_canonical(types, edges))
}

// Batagelj–Brandes: walk the pairs (w, v), w < v, jumping over runs of
// absent pairs with geometric gaps.
fn skip_sample(n: usize, p: f64, rng: &mut impl Rng, edges: &mut Vec<(usize, usize)>) {
    let gap = Geometric::new(p).expect("0 < p < 1");
    let mut v: u64 = 1;
    let mut w: i64 = -1;
    let n = n as u64;
    while v < n {
        let skip = rng.sample(gap);
        w = w
            .saturating_add(1)
            .saturating_add(skip.min(i64::MAX as u64 / 2) as i64);
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v as usize));
        }
    }
}
