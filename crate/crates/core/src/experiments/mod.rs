//! Monte-Carlo sweeps over `c` comparing sampled graphs with the limits.

mod output;
mod summary;

pub use output::{
    csv_string, emit_csv, emit_plotdata, emit_svg, read_csv, render_svg, CSV_COLUMNS,
};
pub use summary::{compare, SummaryRow};

use std::fmt;
use std::str::FromStr;

use log::info;
use serde::{Deserialize, Serialize};

use crate::cores::{core_plus, core_stats};
use crate::error::{Error, Result};
use crate::orientation::{max_orientable_edges, DenseWitness};
use crate::rigidity::rigid_components;
use crate::typed_graph::{induced_subgraph, sample_er, ErConfig, TypedGraph};

/// Which quantities a sweep computes per graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measures {
    pub orient: bool,
    pub cores: bool,
    pub rigid: bool,
    pub witness_scan: bool,
}

impl Measures {
    pub const NONE: Measures = Measures {
        orient: false,
        cores: false,
        rigid: false,
        witness_scan: false,
    };
}

impl Default for Measures {
    fn default() -> Self {
        Measures {
            orient: true,
            cores: true,
            rigid: true,
            witness_scan: false,
        }
    }
}

impl FromStr for Measures {
    type Err = Error;

    /// Comma-separated subset of `orient`, `cores`, `rigid`, `witness`.
    fn from_str(s: &str) -> Result<Self> {
        let mut m = Measures::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "orient" => m.orient = true,
                "cores" => m.cores = true,
                "rigid" => m.rigid = true,
                "witness" | "witness_scan" => m.witness_scan = true,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown measure '{other}'"
                    )))
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for Measures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.orient, "orient"),
            (self.cores, "cores"),
            (self.rigid, "rigid"),
            (self.witness_scan, "witness"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|&(_, name)| name)
        .collect();
        f.write_str(&names.join(","))
    }
}

pub const DEFAULT_RIGID_N_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub q: f64,
    pub c_values: Vec<f64>,
    pub n: usize,
    pub trials: usize,
    pub base_seed: u64,
    pub measures: Measures,
    /// Rigid components are skipped above this many vertices.
    pub rigid_n_cap: usize,
    /// Witnesses at least this large count as "large" in the notes.
    pub witness_size_cap: usize,
}

impl SweepConfig {
    pub fn new(q: f64, c_values: Vec<f64>, n: usize, trials: usize, base_seed: u64) -> Self {
        SweepConfig {
            q,
            c_values,
            n,
            trials,
            base_seed,
            measures: Measures::default(),
            rigid_n_cap: DEFAULT_RIGID_N_CAP,
            witness_size_cap: 0,
        }
    }

    /// `steps` evenly spaced values from `c_min` to `c_max` inclusive.
    pub fn linspace(c_min: f64, c_max: f64, steps: usize) -> Result<Vec<f64>> {
        if steps == 0 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        if !(c_min.is_finite() && c_max.is_finite()) || c_min > c_max {
            return Err(Error::InvalidParameter(format!(
                "bad c range [{c_min}, {c_max}]"
            )));
        }
        if steps == 1 {
            return Ok(vec![c_min]);
        }
        let h = (c_max - c_min) / (steps - 1) as f64;
        Ok((0..steps)
            .map(|k| {
                if k + 1 == steps {
                    c_max
                } else {
                    c_min + h * k as f64
                }
            })
            .collect())
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.c_values.is_empty() {
            return Err(Error::InvalidParameter("no c values given".into()));
        }
        for &c in &self.c_values {
            ErConfig::new(self.n, c, self.q, 0).validate()?;
        }
        Ok(())
    }

    /// Seed of trial `trial`. The same trial index reuses its seed at every
    /// `c`, which couples the sampled graphs across the sweep.
    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.base_seed.wrapping_add(trial as u64)
    }
}

/// One sampled graph. Unmeasured quantities are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub q: f64,
    pub c: f64,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub m: usize,
    pub orientable: Option<bool>,
    pub gap: Option<usize>,
    pub n1_core: Option<usize>,
    pub n2_core: Option<usize>,
    pub m_core: Option<usize>,
    pub n_core_plus: Option<usize>,
    pub largest_rigid_frac: Option<f64>,
    pub largest_connected_rigid_frac: Option<f64>,
    pub witness_size: Option<usize>,
    pub notes: String,
}

impl TrialRecord {
    fn blank(cfg: &SweepConfig, c: f64, trial: usize, m: usize) -> Self {
        TrialRecord {
            q: cfg.q,
            c,
            n: cfg.n,
            trial,
            seed: cfg.trial_seed(trial),
            m,
            orientable: None,
            gap: None,
            n1_core: None,
            n2_core: None,
            m_core: None,
            n_core_plus: None,
            largest_rigid_frac: None,
            largest_connected_rigid_frac: None,
            witness_size: None,
            notes: String::new(),
        }
    }

    fn note(&mut self, text: &str) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text);
    }
}

/// Outcome of [`witness_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessScan {
    /// Smallest dense set met while building a maximum orientation.
    pub witness: Option<DenseWitness>,
    /// Whether that witness has at least `size_cap` vertices.
    pub at_least_cap: bool,
}

/// Looks for vertex sets with more edges than slots.
pub fn witness_scan(g: &TypedGraph, size_cap: usize) -> WitnessScan {
    let witness = max_orientable_edges(g).smallest_witness;
    let at_least_cap = witness.as_ref().is_some_and(|w| w.size() >= size_cap);
    WitnessScan {
        witness,
        at_least_cap,
    }
}

/// Measures one graph.
pub fn measure_graph(cfg: &SweepConfig, c: f64, trial: usize, g: &TypedGraph) -> TrialRecord {
    let mut rec = TrialRecord::blank(cfg, c, trial, g.m());
    let n = g.n().max(1) as f64;
    if cfg.measures.orient || cfg.measures.witness_scan {
        let max = max_orientable_edges(g);
        if cfg.measures.orient {
            rec.orientable = Some(max.gap() == 0);
            rec.gap = Some(max.gap());
        }
        if cfg.measures.witness_scan {
            rec.witness_size = max.smallest_witness.as_ref().map(DenseWitness::size);
            if let Some(size) = rec.witness_size {
                if size >= cfg.witness_size_cap {
                    rec.note(&format!("witness >= {}", cfg.witness_size_cap));
                }
            }
        }
    }
    if cfg.measures.cores {
        let s = core_stats(g, false);
        rec.n1_core = Some(s.n1_core);
        rec.n2_core = Some(s.n2_core);
        rec.m_core = Some(s.m_core);
        rec.n_core_plus = Some(s.n_core_plus);
    }
    if cfg.measures.rigid {
        if g.n() > cfg.rigid_n_cap {
            rec.note(&format!("rigid skipped: n > {}", cfg.rigid_n_cap));
        } else {
            let d = rigid_components(g);
            rec.largest_rigid_frac = Some(d.largest_size() as f64 / n);
            rec.largest_connected_rigid_frac = Some(d.largest_connected_size() as f64 / n);
        }
    }
    rec
}

/// Samples and measures `trials` graphs at every `c`, ordered by `c` then
/// trial.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<TrialRecord>> {
    cfg.validate()?;
    if cfg.measures.rigid && cfg.n > cfg.rigid_n_cap {
        info!(
            "n = {} exceeds rigid_n_cap = {}; rigid measures skipped",
            cfg.n, cfg.rigid_n_cap
        );
    }
    let mut records = Vec::with_capacity(cfg.c_values.len() * cfg.trials);
    for &c in &cfg.c_values {
        for trial in 0..cfg.trials {
            let g = sample_er(&ErConfig::new(cfg.n, c, cfg.q, cfg.trial_seed(trial)))?;
            records.push(measure_graph(cfg, c, trial, &g));
        }
    }
    Ok(records)
}

/// Whether the largest rigid component lies inside the 2.5+1.5-core, for
/// graphs where the subgraph induced by that component has a nonempty
/// 2.5-core.
pub fn giant_inside_core_plus(g: &TypedGraph) -> bool {
    let d = rigid_components(g);
    let Some(giant) = d.components.iter().max_by_key(|c| c.size()) else {
        return true;
    };
    let inner = induced_subgraph(g, &giant.vertices).expect("component vertices are valid");
    if crate::cores::core_2_5(&inner.graph).is_empty() {
        return true;
    }
    let plus = core_plus(g);
    giant.vertices.iter().all(|v| plus.binary_search(v).is_ok())
}
