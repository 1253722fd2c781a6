//! Rigidity percolation on random graphs whose vertices are either sliders
//! (one degree of freedom) or free points (two).
//!
//! * [`typed_graph`]: the graph type, the text format and `G(n, c/n)`
//!   sampling.
//! * [`orientation`]: 1.5-orientations, dense witnesses and maximum
//!   orientable edge sets.
//! * [`cores`]: the 2.5-core and the 2.5+1.5-core.
//! * [`rigidity`]: sparsity, rank, rigidity and rigid components.
//! * [`asymptotics`]: thresholds and limit fractions.
//! * [`experiments`]: Monte-Carlo sweeps and their CSV/SVG output.

pub mod asymptotics;
pub mod cores;
pub mod error;
pub mod experiments;
pub mod orientation;
pub mod rigidity;
pub mod typed_graph;

pub use error::{Error, Result};
pub use typed_graph::{TypedGraph, VertexType};
