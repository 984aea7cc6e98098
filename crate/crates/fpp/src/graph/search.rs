//! Finite materialization and unweighted searches.

use super::{GraphAccess, VertexId};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Default vertex cap for ball materialization and frontier searches.
pub const DEFAULT_BALL_CAP: usize = 5_000_000;

/// A materialized ball: immutable after construction.
///
/// Vertices are stored in breadth-first order with each layer sorted by
/// vertex order, so two materializations of the same ball are identical.
#[derive(Debug, Clone)]
pub struct FiniteGraph {
    center: VertexId,
    radius: u64,
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    adjacency: Vec<Vec<usize>>,
    /// Distance from the center, parallel to `vertices`.
    depth: Vec<u64>,
}

impl FiniteGraph {
    pub fn center(&self) -> VertexId {
        self.center
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    /// Distance from the center to `v`, if `v` is in the ball.
    pub fn depth_of(&self, v: VertexId) -> Option<u64> {
        self.index_of(v).map(|i| self.depth[i])
    }

    /// Edges as sorted index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &j in adj {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertices grouped by distance from the center.
    pub fn layers(&self) -> Vec<Vec<VertexId>> {
        let mut layers: Vec<Vec<VertexId>> = vec![Vec::new(); self.radius as usize + 1];
        for (i, &v) in self.vertices.iter().enumerate() {
            layers[self.depth[i] as usize].push(v);
        }
        layers.truncate(
            layers
                .iter()
                .rposition(|l| !l.is_empty())
                .map_or(0, |p| p + 1),
        );
        layers
    }
}

impl GraphAccess for FiniteGraph {
    fn neighbors_of(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let i = self.index_of(v).ok_or_else(|| Error::Precondition(format!(
            "vertex {v} is not in the materialized ball"
        )))?;
        let mut out: Vec<VertexId> = self.adjacency[i].iter().map(|&j| self.vertices[j]).collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Materializes the ball of the given radius around `center`, with all
/// induced edges. Aborts with [`Error::BallCapExceeded`] when the vertex
/// count would exceed `cap`.
pub fn ball(
    g: &impl GraphAccess,
    center: VertexId,
    radius: u64,
    cap: usize,
) -> Result<FiniteGraph> {
    let mut vertices = vec![center];
    let mut index = HashMap::new();
    index.insert(center, 0usize);
    let mut depth = vec![0u64];
    let mut frontier = vec![0usize];

    for layer in 1..=radius {
        let mut next: Vec<VertexId> = Vec::new();
        for &i in &frontier {
            for n in g.neighbors_of(vertices[i])? {
                if !index.contains_key(&n) {
                    index.insert(n, usize::MAX); // reserve; fixed below
                    next.push(n);
                }
            }
        }
        next.sort_unstable();
        let mut next_idx = Vec::with_capacity(next.len());
        for v in next {
            if vertices.len() >= cap {
                return Err(Error::BallCapExceeded { cap, radius });
            }
            let i = vertices.len();
            index.insert(v, i);
            vertices.push(v);
            depth.push(layer);
            next_idx.push(i);
        }
        if next_idx.is_empty() {
            break;
        }
        frontier = next_idx;
    }

    let mut adjacency = vec![Vec::new(); vertices.len()];
    for (i, &v) in vertices.iter().enumerate() {
        for n in g.neighbors_of(v)? {
            if let Some(&j) = index.get(&n) {
                adjacency[i].push(j);
            }
        }
        adjacency[i].sort_unstable();
    }

    Ok(FiniteGraph {
        center,
        radius,
        vertices,
        index,
        adjacency,
        depth,
    })
}

/// Exact breadth-first distance from `u` to `v`: `None` when it exceeds
/// `cutoff`. The frontier is capped at `cap` vertices.
///
/// This is the reference route for distances; generators answer the same
/// query in closed form via [`super::GraphGenerator::distance_within`].
pub fn bfs_distance(
    g: &impl GraphAccess,
    u: VertexId,
    v: VertexId,
    cutoff: u64,
    cap: usize,
) -> Result<Option<u64>> {
    if u == v {
        return Ok(Some(0));
    }
    let mut seen = HashMap::new();
    seen.insert(u, 0u64);
    let mut frontier = vec![u];
    for d in 1..=cutoff {
        let mut next = Vec::new();
        for &w in &frontier {
            for n in g.neighbors_of(w)? {
                if n == v {
                    return Ok(Some(d));
                }
                if !seen.contains_key(&n) {
                    seen.insert(n, d);
                    next.push(n);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::SearchCapExceeded { cap });
        }
        if next.is_empty() {
            return Ok(None);
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(None)
}

/// Exact set distance `d(from, Z)` by breadth-first expansion from `from`,
/// together with every vertex of `Z` realizing it (the full argmin set).
///
/// Returns `Ok(None)` when the distance exceeds `cutoff`.
pub fn set_distance_bfs(
    g: &impl GraphAccess,
    from: VertexId,
    in_set: &dyn Fn(VertexId) -> bool,
    cutoff: u64,
    cap: usize,
) -> Result<Option<(u64, Vec<VertexId>)>> {
    if in_set(from) {
        return Ok(Some((0, vec![from])));
    }
    let mut seen = HashMap::new();
    seen.insert(from, ());
    let mut frontier = vec![from];
    for d in 1..=cutoff {
        let mut next = Vec::new();
        let mut hits = Vec::new();
        for &w in &frontier {
            for n in g.neighbors_of(w)? {
                if seen.contains_key(&n) {
                    continue;
                }
                seen.insert(n, ());
                if in_set(n) {
                    hits.push(n);
                }
                next.push(n);
            }
        }
        if !hits.is_empty() {
            hits.sort_unstable();
            hits.dedup();
            return Ok(Some((d, hits)));
        }
        if seen.len() > cap {
            return Err(Error::SearchCapExceeded { cap });
        }
        if next.is_empty() {
            return Ok(None);
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(None)
}
