//! The three graph families and their closed-form geometry.
//!
//! Vertex encodings (all triples of `i64`):
//!
//! * `lattice(d)`, d ∈ {1,2,3}: the hypercubic lattice Z^d. A vertex is its
//!   coordinate vector, unused coordinates pinned to 0. Edges are unit steps.
//!
//! * `tree(k)`, k ≥ 3: the infinite k-regular tree, encoded relative to a
//!   distinguished bi-infinite line (the "spine"). A vertex is
//!   `(spine position i, depth d, branch code c)`: spine vertices are
//!   `(i, 0, 0)`; each spine vertex carries k−2 hanging subtrees whose roots
//!   are `(i, 1, j)`, j < k−2; below depth 1 every vertex has k−1 children
//!   `(i, d+1, c·(k−1) + j)`, j < k−1. The code is the branch word read
//!   most-significant-first, so parent(c) = c div (k−1).
//!
//! * `strip(κ, cap)`: a line with square grid patches glued along it. The
//!   spine is a copy of Z at `(n, 0, 0)`. At every position `a` with
//!   `a ≡ 0 (mod w(a))`, where `w(n) = min(cap, ⌈κ(|n|)⌉)`, a
//!   `w(a) × w(a)` grid patch is attached whose bottom row is the spine
//!   segment `[a, a+w(a)]`. Patch-interior vertices are
//!   `(column x, row r, anchor a)` with `a ≤ x ≤ a+w(a)` and `1 ≤ r ≤ w(a)`.
//!   Patches meet each other only along the spine. Detouring over a patch at
//!   position n costs O(w(n)) = O(κ(|n|)), so the spine admits sublinearly
//!   growing excursions but no large bounded ones.

use super::{GraphAccess, VertexId};
use crate::error::{Error, Result};
use crate::sublinear::SublinearFunction;
use std::fmt;

/// Which family a generator belongs to, with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorKind {
    Lattice { dim: u8 },
    RegularTree { degree: u8 },
    StripLine { width: SublinearFunction, cap: u32 },
}

/// A pure, stateless description of an infinite connected bounded-degree
/// graph. Cloning or sharing across threads is free of synchronization.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphGenerator {
    kind: GeneratorKind,
}

impl GraphGenerator {
    pub fn lattice(dim: u8) -> GraphGenerator {
        assert!((1..=3).contains(&dim), "lattice dimension must be 1..=3");
        GraphGenerator {
            kind: GeneratorKind::Lattice { dim },
        }
    }

    pub fn regular_tree(degree: u8) -> GraphGenerator {
        assert!((3..=8).contains(&degree), "tree degree must be 3..=8");
        GraphGenerator {
            kind: GeneratorKind::RegularTree { degree },
        }
    }

    pub fn strip_line(width: SublinearFunction, cap: u32) -> GraphGenerator {
        assert!(cap >= 1, "strip cap must be at least 1");
        GraphGenerator {
            kind: GeneratorKind::StripLine { width, cap },
        }
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    /// Upper bound on vertex degree, by construction.
    pub fn degree_bound(&self) -> usize {
        match self.kind {
            GeneratorKind::Lattice { dim } => 2 * dim as usize,
            GeneratorKind::RegularTree { degree } => degree as usize,
            GeneratorKind::StripLine { .. } => 6,
        }
    }

    /// True when the graph has no cycles, so simple paths are unique.
    pub fn unique_paths(&self) -> bool {
        matches!(self.kind, GeneratorKind::RegularTree { .. })
    }

    /// The designated bi-infinite geodesic through the base point.
    pub fn marked_line(&self) -> MarkedLine {
        MarkedLine { gen: self.clone() }
    }

    /// The base point, `marked_line().vertex(0)`.
    pub fn origin(&self) -> VertexId {
        VertexId(0, 0, 0)
    }

    fn name(&self) -> String {
        self.to_string()
    }

    fn invalid(&self, v: VertexId, reason: impl Into<String>) -> Error {
        Error::InvalidVertex {
            generator: self.name(),
            vertex: v,
            reason: reason.into(),
        }
    }

    /// Patch width at position `n` for the strip generator.
    fn strip_width(&self, n: i64) -> i64 {
        match &self.kind {
            GeneratorKind::StripLine { width, cap } => {
                let w = libm::ceil(width.eval(n.unsigned_abs() as f64)) as i64;
                w.clamp(1, *cap as i64)
            }
            _ => unreachable!("strip_width on non-strip generator"),
        }
    }

    fn strip_is_anchor(&self, a: i64) -> bool {
        a.rem_euclid(self.strip_width(a)) == 0
    }

    /// Anchors of patches whose column range contains `x`, ascending.
    fn strip_anchors_covering(&self, x: i64) -> Vec<i64> {
        let cap = match &self.kind {
            GeneratorKind::StripLine { cap, .. } => *cap as i64,
            _ => unreachable!(),
        };
        let mut out = Vec::new();
        for a in (x - cap)..=x {
            if self.strip_is_anchor(a) && a + self.strip_width(a) >= x {
                out.push(a);
            }
        }
        out
    }

    /// Validates that `v` is a vertex of this generator.
    pub fn validate(&self, v: VertexId) -> Result<()> {
        match &self.kind {
            GeneratorKind::Lattice { dim } => {
                if (*dim < 3 && v.2 != 0) || (*dim < 2 && v.1 != 0) {
                    return Err(self.invalid(v, "coordinate beyond lattice dimension"));
                }
                Ok(())
            }
            GeneratorKind::RegularTree { degree } => {
                let (d, c) = (v.1, v.2);
                if d < 0 || c < 0 {
                    return Err(self.invalid(v, "negative depth or branch code"));
                }
                if d == 0 {
                    if c != 0 {
                        return Err(self.invalid(v, "spine vertex with nonzero branch code"));
                    }
                    return Ok(());
                }
                // Valid codes at depth d: 0 ≤ c < (k−2)·(k−1)^(d−1).
                let k = *degree as u128;
                let mut limit: u128 = k - 2;
                for _ in 1..d {
                    limit = limit.saturating_mul(k - 1);
                    if limit > i64::MAX as u128 {
                        return Ok(()); // every representable code is in range
                    }
                }
                if (c as u128) < limit {
                    Ok(())
                } else {
                    Err(self.invalid(v, "branch code out of range for depth"))
                }
            }
            GeneratorKind::StripLine { .. } => {
                let (x, r, a) = (v.0, v.1, v.2);
                if r == 0 {
                    if a != 0 {
                        return Err(self.invalid(v, "spine vertex with nonzero anchor"));
                    }
                    return Ok(());
                }
                if r < 0 {
                    return Err(self.invalid(v, "negative row"));
                }
                if !self.strip_is_anchor(a) {
                    return Err(self.invalid(v, "anchor position carries no patch"));
                }
                let w = self.strip_width(a);
                if !(a <= x && x <= a + w) {
                    return Err(self.invalid(v, "column outside patch"));
                }
                if r > w {
                    return Err(self.invalid(v, "row above patch top"));
                }
                Ok(())
            }
        }
    }

    /// Deterministic sorted neighbor list. Length ≤ `degree_bound()`.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.validate(v)?;
        let mut out = match &self.kind {
            GeneratorKind::Lattice { dim } => {
                let mut out = Vec::with_capacity(2 * *dim as usize);
                let coords = [v.0, v.1, v.2];
                for axis in 0..*dim as usize {
                    for step in [-1i64, 1] {
                        let mut c = coords;
                        c[axis] += step;
                        out.push(VertexId(c[0], c[1], c[2]));
                    }
                }
                out
            }
            GeneratorKind::RegularTree { degree } => {
                let k = *degree as i64;
                let (i, d, c) = (v.0, v.1, v.2);
                let mut out = Vec::with_capacity(*degree as usize);
                if d == 0 {
                    out.push(VertexId(i - 1, 0, 0));
                    out.push(VertexId(i + 1, 0, 0));
                    for j in 0..k - 2 {
                        out.push(VertexId(i, 1, j));
                    }
                } else {
                    let parent = if d == 1 {
                        VertexId(i, 0, 0)
                    } else {
                        VertexId(i, d - 1, c.div_euclid(k - 1))
                    };
                    out.push(parent);
                    let base = c.checked_mul(k - 1).ok_or_else(|| {
                        self.invalid(v, "children exceed the encodable depth")
                    })?;
                    for j in 0..k - 1 {
                        out.push(VertexId(i, d + 1, base + j));
                    }
                }
                out
            }
            GeneratorKind::StripLine { .. } => {
                let (x, r, a) = (v.0, v.1, v.2);
                let mut out = Vec::with_capacity(6);
                if r == 0 {
                    out.push(VertexId(x - 1, 0, 0));
                    out.push(VertexId(x + 1, 0, 0));
                    for anchor in self.strip_anchors_covering(x) {
                        out.push(VertexId(x, 1, anchor));
                    }
                } else {
                    let w = self.strip_width(a);
                    if x > a {
                        out.push(VertexId(x - 1, r, a));
                    }
                    if x < a + w {
                        out.push(VertexId(x + 1, r, a));
                    }
                    if r > 1 {
                        out.push(VertexId(x, r - 1, a));
                    } else {
                        out.push(VertexId(x, 0, 0));
                    }
                    if r < w {
                        out.push(VertexId(x, r + 1, a));
                    }
                }
                out
            }
        };
        out.sort_unstable();
        debug_assert!(out.len() <= self.degree_bound());
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
        Ok(out)
    }

    /// Exact graph distance, in closed form per family.
    ///
    /// Breadth-first search computes the same values (and serves as the test
    /// oracle); the closed form is what makes tree-scale queries feasible.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u64> {
        self.validate(u)?;
        self.validate(v)?;
        Ok(match &self.kind {
            GeneratorKind::Lattice { .. } => {
                u.0.abs_diff(v.0) + u.1.abs_diff(v.1) + u.2.abs_diff(v.2)
            }
            GeneratorKind::RegularTree { degree } => {
                let k = *degree as i64;
                if u.0 != v.0 {
                    // Hanging subtrees meet the rest of the graph only at
                    // their spine vertex.
                    u.1 as u64 + u.0.abs_diff(v.0) + v.1 as u64
                } else {
                    let (mut du, mut cu) = (u.1, u.2);
                    let (mut dv, mut cv) = (v.1, v.2);
                    let mut total = 0u64;
                    while du > dv {
                        cu = cu.div_euclid(k - 1);
                        du -= 1;
                        total += 1;
                    }
                    while dv > du {
                        cv = cv.div_euclid(k - 1);
                        dv -= 1;
                        total += 1;
                    }
                    while cu != cv {
                        // du == dv; at depth 1 differing codes are different
                        // hanging subtrees and meet at the spine (depth 0,
                        // both codes become 0 via the du==0 check below).
                        if du == 0 {
                            break;
                        }
                        cu = cu.div_euclid(k - 1);
                        cv = cv.div_euclid(k - 1);
                        du -= 1;
                        dv -= 1;
                        total += 2;
                    }
                    if cu != cv {
                        unreachable!("codes must meet at the spine");
                    }
                    total
                }
            }
            GeneratorKind::StripLine { .. } => {
                let same_patch = u.1 > 0 && v.1 > 0 && u.2 == v.2;
                if same_patch {
                    u.0.abs_diff(v.0) + u.1.abs_diff(v.1)
                } else {
                    // Distinct patches interconnect only along the spine.
                    u.1 as u64 + u.0.abs_diff(v.0) + v.1 as u64
                }
            }
        })
    }

    /// Exact graph distance with a cutoff: `None` when the distance exceeds
    /// `cutoff`.
    pub fn distance_within(&self, u: VertexId, v: VertexId, cutoff: u64) -> Result<Option<u64>> {
        let d = self.distance(u, v)?;
        Ok(if d <= cutoff { Some(d) } else { None })
    }

    /// A canonical geodesic path from `u` to `v` (deterministic in its
    /// choice among ties). Its length always equals `distance(u, v)`.
    pub fn canonical_path(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        self.validate(u)?;
        self.validate(v)?;
        let mut path = vec![u];
        match &self.kind {
            GeneratorKind::Lattice { .. } => {
                let mut cur = u;
                for axis in 0..3usize {
                    let target = [v.0, v.1, v.2][axis];
                    loop {
                        let c = [cur.0, cur.1, cur.2];
                        if c[axis] == target {
                            break;
                        }
                        let step = if target > c[axis] { 1 } else { -1 };
                        let mut n = c;
                        n[axis] += step;
                        cur = VertexId(n[0], n[1], n[2]);
                        path.push(cur);
                    }
                }
            }
            GeneratorKind::RegularTree { degree } => {
                let k = *degree as i64;
                // Ascend both endpoints to their meeting vertex, then splice.
                let ascend_to_spine = |mut w: VertexId, out: &mut Vec<VertexId>| {
                    while w.1 > 0 {
                        w = if w.1 == 1 {
                            VertexId(w.0, 0, 0)
                        } else {
                            VertexId(w.0, w.1 - 1, w.2.div_euclid(k - 1))
                        };
                        out.push(w);
                    }
                    w
                };
                if u.0 != v.0 {
                    let mut up = Vec::new();
                    let su = ascend_to_spine(u, &mut up);
                    path.extend(up.iter().copied());
                    let step = if v.0 > su.0 { 1 } else { -1 };
                    let mut x = su.0;
                    while x != v.0 {
                        x += step;
                        path.push(VertexId(x, 0, 0));
                    }
                    let mut down = Vec::new();
                    ascend_to_spine(v, &mut down);
                    down.reverse();
                    down.push(v);
                    // first element of `down` is the spine vertex already at
                    // the end of `path`
                    path.extend(down.into_iter().skip(1));
                } else {
                    let mut uu = u;
                    let mut vv = v;
                    let mut up_u = Vec::new();
                    let mut up_v = Vec::new();
                    let parent = |w: VertexId| {
                        if w.1 == 1 {
                            VertexId(w.0, 0, 0)
                        } else {
                            VertexId(w.0, w.1 - 1, w.2.div_euclid(k - 1))
                        }
                    };
                    while uu.1 > vv.1 {
                        uu = parent(uu);
                        up_u.push(uu);
                    }
                    while vv.1 > uu.1 {
                        vv = parent(vv);
                        up_v.push(vv);
                    }
                    while uu != vv {
                        uu = parent(uu);
                        up_u.push(uu);
                        vv = parent(vv);
                        up_v.push(vv);
                    }
                    path.extend(up_u.iter().copied());
                    up_v.pop(); // the meeting vertex is already present
                    up_v.reverse();
                    path.extend(up_v.iter().copied());
                    path.push(v);
                    if u == v {
                        path.truncate(1);
                    }
                }
            }
            GeneratorKind::StripLine { .. } => {
                let same_patch = u.1 > 0 && v.1 > 0 && u.2 == v.2;
                let mut cur = u;
                let mut step_to = |w: VertexId, path: &mut Vec<VertexId>| {
                    cur = w;
                    path.push(w);
                };
                if same_patch {
                    // Horizontal along the start row, then vertical.
                    let step = if v.0 > u.0 { 1 } else { -1 };
                    while cur.0 != v.0 {
                        step_to(VertexId(cur.0 + step, cur.1, cur.2), &mut path);
                    }
                    let vstep = if v.1 > cur.1 { 1 } else { -1 };
                    while cur.1 != v.1 {
                        step_to(VertexId(cur.0, cur.1 + vstep, cur.2), &mut path);
                    }
                } else {
                    // Down to the spine, along it, and up into the far patch.
                    while cur.1 > 0 {
                        let next = if cur.1 == 1 {
                            VertexId(cur.0, 0, 0)
                        } else {
                            VertexId(cur.0, cur.1 - 1, cur.2)
                        };
                        step_to(next, &mut path);
                    }
                    let step = if v.0 > cur.0 { 1 } else { -1 };
                    while cur.0 != v.0 {
                        step_to(VertexId(cur.0 + step, 0, 0), &mut path);
                    }
                    for r in 1..=v.1 {
                        step_to(VertexId(v.0, r, v.2), &mut path);
                    }
                }
            }
        }
        debug_assert_eq!(path.len() as u64 - 1, self.distance(u, v)?);
        Ok(path)
    }

    /// Parses the generator grammar: `lattice:d`, `tree:k`,
    /// `strip:(<gauge>):cap` where `<gauge>` is a sublinear-gauge spec.
    pub fn parse(input: &str) -> Result<GraphGenerator> {
        let bad = |reason: &str| Error::BadSpec {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if let Some(rest) = input.strip_prefix("lattice:") {
            let dim: u8 = rest.parse().map_err(|_| bad("expected lattice:d"))?;
            if !(1..=3).contains(&dim) {
                return Err(bad("lattice dimension must be 1..=3"));
            }
            return Ok(GraphGenerator::lattice(dim));
        }
        if let Some(rest) = input.strip_prefix("tree:") {
            let k: u8 = rest.parse().map_err(|_| bad("expected tree:k"))?;
            if !(3..=8).contains(&k) {
                return Err(bad("tree degree must be 3..=8"));
            }
            return Ok(GraphGenerator::regular_tree(k));
        }
        if let Some(rest) = input.strip_prefix("strip:(") {
            let close = rest.rfind(')').ok_or_else(|| bad("missing )"))?;
            let gauge = SublinearFunction::parse(&rest[..close])?;
            let tail = &rest[close + 1..];
            let cap_str = tail
                .strip_prefix(':')
                .ok_or_else(|| bad("expected strip:(<gauge>):cap"))?;
            let cap: u32 = cap_str.parse().map_err(|_| bad("cap must be an integer"))?;
            if cap == 0 {
                return Err(bad("cap must be at least 1"));
            }
            return Ok(GraphGenerator::strip_line(gauge, cap));
        }
        Err(bad("expected lattice:d, tree:k, or strip:(<gauge>):cap"))
    }
}

impl fmt::Display for GraphGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GeneratorKind::Lattice { dim } => write!(f, "lattice:{dim}"),
            GeneratorKind::RegularTree { degree } => write!(f, "tree:{degree}"),
            GeneratorKind::StripLine { width, cap } => write!(f, "strip:({width}):{cap}"),
        }
    }
}

impl GraphAccess for GraphGenerator {
    fn neighbors_of(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.neighbors(v)
    }

    fn unique_path(&self, u: VertexId, v: VertexId) -> Option<Result<Vec<VertexId>>> {
        if self.unique_paths() {
            Some(self.canonical_path(u, v))
        } else {
            None
        }
    }
}

/// The designated bi-infinite geodesic line of a generator: the x-axis of a
/// lattice, the spine of a tree or strip. `vertex(i) = (i, 0, 0)` in every
/// family, and `d(vertex(i), vertex(j)) = |i − j|`.
#[derive(Debug, Clone)]
pub struct MarkedLine {
    gen: GraphGenerator,
}

impl MarkedLine {
    pub fn generator(&self) -> &GraphGenerator {
        &self.gen
    }

    pub fn vertex(&self, i: i64) -> VertexId {
        VertexId(i, 0, 0)
    }

    pub fn base_point(&self) -> VertexId {
        VertexId(0, 0, 0)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.1 == 0 && v.2 == 0
    }

    /// Index of `v` on the line, if it lies on it.
    pub fn index_of(&self, v: VertexId) -> Option<i64> {
        self.contains(v).then_some(v.0)
    }

    /// Exact set distance `d(v, line)`.
    ///
    /// In every family the off-line coordinates measure it directly: lattice
    /// vertices sit `|y| + |z|` above the axis, tree vertices `depth` above
    /// the spine, strip vertices `row` above it.
    pub fn distance_to(&self, v: VertexId) -> Result<u64> {
        self.gen.validate(v)?;
        Ok(match self.gen.kind() {
            GeneratorKind::Lattice { .. } => v.1.unsigned_abs() + v.2.unsigned_abs(),
            GeneratorKind::RegularTree { .. } | GeneratorKind::StripLine { .. } => {
                v.1 as u64
            }
        })
    }

    /// The nearest-point projection of `v` to the line. Unique in all three
    /// families: the foot is the line vertex sharing the first coordinate.
    pub fn foot(&self, v: VertexId) -> Result<VertexId> {
        self.gen.validate(v)?;
        Ok(VertexId(v.0, 0, 0))
    }

    /// Exact set distance from `v` to the line segment with indices in
    /// `[lo, hi]`.
    pub fn segment_distance(&self, v: VertexId, lo: i64, hi: i64) -> Result<u64> {
        let line_d = self.distance_to(v)?;
        let overshoot = if v.0 < lo {
            (lo - v.0) as u64
        } else if v.0 > hi {
            (v.0 - hi) as u64
        } else {
            0
        };
        Ok(line_d + overshoot)
    }
}
