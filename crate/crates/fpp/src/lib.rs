//! First passage percolation on infinite bounded-degree graphs.
//!
//! The crate provides lazy deterministic graph generators with a marked
//! bi-infinite geodesic line, a reproducible random edge-weight environment,
//! exact weighted shortest paths by lazy expansion, the coarse-geometry
//! probes used to classify how strongly geodesics cling to the marked line
//! (gauge neighborhoods, projections, contraction, recurrence, divergence),
//! and a seeded Monte Carlo harness that tracks weighted geodesics between
//! escaping endpoints and extracts their stable core.
//!
//! The `book/` directory of the repository walks through the concepts with
//! runnable listings; every listing compiles and runs as a doc-test.

pub mod error;
pub mod graph;
pub mod rng;
pub mod sublinear;
pub mod weights;

pub use error::{Error, Result};
