//! Lazy, deterministic generators for infinite connected bounded-degree
//! graphs, plus finite-ball materialization and distance queries.
//!
//! Vertices of every generator are encoded as a triple of 64-bit integers.
//! Each generator documents its encoding on [`GraphGenerator`]. Generators
//! are pure values: two processes constructed with the same parameters
//! produce identical neighbor lists, so they can be shared freely across
//! threads.

mod generators;
mod search;

pub use generators::{GeneratorKind, GraphGenerator, MarkedLine};
pub use search::{ball, bfs_distance, set_distance_bfs, FiniteGraph};

use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex identity: a generator-specific coordinate triple.
///
/// The derived ordering (lexicographic on the tuple) is the canonical vertex
/// order used for edge canonicalization and tie-breaking everywhere.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct VertexId(pub i64, pub i64, pub i64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

/// An unordered edge, stored with endpoints in canonical (sorted) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    /// Canonicalizes: `Edge::new(u, v) == Edge::new(v, u)`.
    pub fn new(u: VertexId, v: VertexId) -> Edge {
        if u <= v {
            Edge { lo: u, hi: v }
        } else {
            Edge { lo: v, hi: u }
        }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }

    /// The six coordinate limbs in canonical order, as raw bit patterns.
    pub fn limbs(&self) -> [u64; 6] {
        [
            self.lo.0 as u64,
            self.lo.1 as u64,
            self.lo.2 as u64,
            self.hi.0 as u64,
            self.hi.1 as u64,
            self.hi.2 as u64,
        ]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}--{}", self.lo, self.hi)
    }
}

/// Read access to a graph by neighbor expansion.
///
/// Searches only ever touch a graph through this trait, so the same code runs
/// on lazy infinite generators and on materialized finite graphs.
pub trait GraphAccess {
    fn neighbors_of(&self, v: VertexId) -> Result<Vec<VertexId>>;

    /// For acyclic graphs: the unique simple path from `u` to `v`, if the
    /// implementation can produce it directly. Weighted searches use this to
    /// stay exact where frontier expansion would be exponential.
    fn unique_path(&self, _u: VertexId, _v: VertexId) -> Option<Result<Vec<VertexId>>> {
        None
    }
}
