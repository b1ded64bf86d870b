//! Finite machinery around infinitely edge-connected graphs: Farey-graph
//! generators, edge-connectivity kernels, separation systems and S-trees,
//! recursive tree pruning, minor-map certificates, and an engine that
//! extracts halved-Farey minors from finite hosts.
//!
//! "Infinitely edge-connected" is read throughout as `λ >= k` for a
//! caller-chosen `k`, and every operation reports the strength it achieved.

pub mod connectivity;
pub mod error;
mod flow;
pub mod fraction;
pub mod generators;
pub mod graph;
pub mod io;
pub mod minors;
pub mod separations;
pub mod tree_tools;
pub mod engine;

pub use error::{Error, Result};
pub use fraction::Fraction;
pub use graph::{vset, Color, ColoredGraph, MultiGraph, VertexId, VertexSet};
