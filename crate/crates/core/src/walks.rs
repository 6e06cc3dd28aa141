//! Walk accounting on the augmented graph.
//!
//! Every vertex of the input graph is padded with pendant trees until it has
//! degree `delta`, so that the non-backtracking walks of length at most `k`
//! from any original vertex number exactly `f(k, delta)`. Walking these in a
//! fixed order against a partial coloring, a walk is *nice* when its endpoint
//! cannot add a new forbidden color. Each nice walk is one color saved.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds;
use crate::coloring::PartialColoring;
use crate::graph::Graph;

/// Upper bound on materialized vertices of an augmented graph, and on the
/// walks materialized for one origin.
pub const MEMORY_GUARD: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("graph has maximum degree {max_degree} > target degree {delta}")]
    DegreeTooLarge { max_degree: usize, delta: usize },
    #[error("augmentation needs delta >= 3 and k >= 1 (delta={delta}, k={k})")]
    BadParameters { delta: usize, k: usize },
    #[error("walk origin {0} is an auxiliary vertex")]
    AuxiliaryOrigin(usize),
    #[error("walk length {max_len} exceeds augmentation height {height}")]
    LengthExceedsHeight { max_len: usize, height: usize },
    #[error("{what} would exceed the memory guard ({count} > {MEMORY_GUARD})")]
    TooLarge { what: &'static str, count: String },
}

/// `G` plus pendant trees. Vertices `0..original_count` are the original
/// ones; every later vertex sits in some pendant tree.
#[derive(Debug, Clone)]
pub struct AugmentedGraph {
    graph: Graph,
    original_count: usize,
    k: usize,
    delta: usize,
    /// For auxiliary vertex `original_count + i`: the original vertex its
    /// tree hangs from, and the distance to it.
    anchor: Vec<(usize, usize)>,
}

impl AugmentedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn original_count(&self) -> usize {
        self.original_count
    }

    pub fn height(&self) -> usize {
        self.k
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    #[inline]
    pub fn is_original(&self, v: usize) -> bool {
        v < self.original_count
    }

    /// `(anchor, depth)` of a vertex; original vertices are their own anchor
    /// at depth 0.
    #[inline]
    pub fn anchor(&self, v: usize) -> (usize, usize) {
        if self.is_original(v) {
            (v, 0)
        } else {
            self.anchor[v - self.original_count]
        }
    }

    /// Distance in the augmented graph from an original vertex to `v`, given
    /// a BFS table of the original graph rooted at that vertex.
    pub fn distance_via(&self, table: &crate::graph::DistanceTable, v: usize) -> Option<usize> {
        let (a, depth) = self.anchor(v);
        table.get(a).map(|d| d + depth)
    }
}

/// Hangs `delta - deg(v)` copies of a height-`k` tree off every vertex `v`;
/// each tree node above the bottom level has `delta - 1` children.
pub fn augment(g: &Graph, k: usize, delta: usize) -> Result<AugmentedGraph, WalkError> {
    if delta < 3 || k < 1 {
        return Err(WalkError::BadParameters { delta, k });
    }
    if g.max_degree() > delta {
        return Err(WalkError::DegreeTooLarge {
            max_degree: g.max_degree(),
            delta,
        });
    }
    let n = g.vertex_count();
    let missing: usize = (0..n).map(|v| delta - g.degree(v)).sum();
    let tree_size = (0..=k).try_fold(0usize, |acc, h| {
        (delta - 1)
            .checked_pow(h as u32)
            .and_then(|p| acc.checked_add(p))
    });
    let total = tree_size
        .and_then(|t| t.checked_mul(missing))
        .and_then(|t| t.checked_add(n))
        .filter(|&t| t <= MEMORY_GUARD)
        .ok_or_else(|| WalkError::TooLarge {
            what: "augmented graph",
            count: format!("{missing} trees of height {k}"),
        })?;

    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(total);
    adjacency.extend((0..n).map(|v| g.neighbors(v).to_vec()));
    let mut anchor = Vec::with_capacity(total - n);
    for v in 0..n {
        for _ in g.degree(v)..delta {
            let root = adjacency.len();
            adjacency[v].push(root);
            adjacency.push(vec![v]);
            anchor.push((v, 1));
            let mut level = vec![root];
            for depth in 1..=k {
                let mut next_level = Vec::with_capacity(level.len() * (delta - 1));
                for &parent in &level {
                    for _ in 0..delta - 1 {
                        let child = adjacency.len();
                        adjacency[parent].push(child);
                        adjacency.push(vec![parent]);
                        anchor.push((v, depth + 1));
                        next_level.push(child);
                    }
                }
                level = next_level;
            }
        }
    }
    debug_assert_eq!(adjacency.len(), total);
    Ok(AugmentedGraph {
        graph: Graph::from_sorted_adjacency(adjacency),
        original_count: n,
        k,
        delta,
        anchor,
    })
}

/// A non-backtracking walk, as its vertex sequence (origin first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub vertices: Vec<usize>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn endpoint(&self) -> usize {
        *self.vertices.last().expect("walks have an origin")
    }

    pub fn is_non_backtracking_in(&self, g: &Graph) -> bool {
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && self.vertices.windows(3).all(|w| w[0] != w[2])
    }
}

const NO_PARENT: u32 = u32::MAX;

/// All non-backtracking walks from one origin up to a length bound, in
/// length-major order and lexicographic by adjacency position within each
/// length. Walks are stored as a prefix tree: each entry keeps its endpoint
/// and the index of the walk it extends.
#[derive(Debug, Clone)]
pub struct WalkOrder {
    origin: usize,
    max_len: usize,
    includes_empty: bool,
    endpoint: Vec<u32>,
    parent: Vec<u32>,
    /// `level_start[l]` is the index of the first walk of length `l`.
    level_start: Vec<usize>,
}

impl WalkOrder {
    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }

    pub fn len(&self) -> usize {
        self.endpoint.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoint.is_empty()
    }

    #[inline]
    pub fn endpoint(&self, i: usize) -> usize {
        self.endpoint[i] as usize
    }

    pub fn endpoints(&self) -> impl Iterator<Item = usize> + '_ {
        self.endpoint.iter().map(|&e| e as usize)
    }

    pub fn length(&self, i: usize) -> usize {
        self.level_start.partition_point(|&s| s <= i) - 1
    }

    pub fn walk(&self, i: usize) -> Walk {
        let mut vertices = Vec::new();
        let mut cur = i as u32;
        while cur != NO_PARENT {
            let idx = cur as usize;
            if self.includes_empty && idx == 0 {
                break;
            }
            vertices.push(self.endpoint[idx] as usize);
            cur = self.parent[idx];
        }
        vertices.push(self.origin);
        vertices.reverse();
        Walk { vertices }
    }

    pub fn walks(&self) -> impl Iterator<Item = Walk> + '_ {
        (0..self.len()).map(|i| self.walk(i))
    }
}

/// Enumerates the non-backtracking walks of length `1..=max_len` from an
/// original vertex, plus the empty walk first when `include_empty` is set.
pub fn enumerate_walks(
    ag: &AugmentedGraph,
    origin: usize,
    max_len: usize,
    include_empty: bool,
) -> Result<WalkOrder, WalkError> {
    if !ag.is_original(origin) {
        return Err(WalkError::AuxiliaryOrigin(origin));
    }
    if max_len > ag.height() {
        return Err(WalkError::LengthExceedsHeight {
            max_len,
            height: ag.height(),
        });
    }
    let expected = bounds::f(max_len, ag.delta());
    let expected = num_traits::ToPrimitive::to_usize(&expected)
        .filter(|&c| c <= MEMORY_GUARD)
        .ok_or_else(|| WalkError::TooLarge {
            what: "walk enumeration",
            count: expected.to_string(),
        })?;
    let g = ag.graph();
    let extra = usize::from(include_empty);
    let mut endpoint = Vec::with_capacity(expected + extra);
    let mut parent = Vec::with_capacity(expected + extra);
    // vertex preceding each endpoint; the origin for length-1 walks
    let mut previous: Vec<u32> = Vec::with_capacity(expected + extra);
    let mut level_start = vec![0];
    if include_empty {
        endpoint.push(origin as u32);
        parent.push(NO_PARENT);
        previous.push(NO_PARENT);
    }
    level_start.push(endpoint.len());
    for &w in g.neighbors(origin) {
        endpoint.push(w as u32);
        parent.push(NO_PARENT);
        previous.push(origin as u32);
    }
    for _ in 1..max_len {
        let (from, to) = (*level_start.last().unwrap(), endpoint.len());
        level_start.push(to);
        for i in from..to {
            let (end, prev) = (endpoint[i], previous[i]);
            for &w in g.neighbors(end as usize) {
                if w as u32 != prev {
                    endpoint.push(w as u32);
                    parent.push(i as u32);
                    previous.push(end);
                }
            }
        }
    }
    if max_len == 0 {
        level_start.pop();
    }
    Ok(WalkOrder {
        origin,
        max_len,
        includes_empty: include_empty,
        endpoint,
        parent,
        level_start,
    })
}

/// Outcome of classifying a walk order against a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceCount {
    /// Walks ending at an uncolored vertex, at a vertex already reached by
    /// an earlier walk, or at a color already reached by an earlier walk.
    pub count: usize,
    /// Same, without the color clause: uncolored endpoint or repeated
    /// endpoint vertex only.
    pub literal_count: usize,
    /// Nice walks whose endpoint lies in a pendant tree.
    pub auxiliary: usize,
    pub flags: Vec<bool>,
}

/// Reusable marker arrays for [`count_nice`], stamped instead of cleared.
#[derive(Debug, Default)]
pub struct NiceScratch {
    vertex_seen: Vec<u32>,
    color_seen: Vec<u32>,
    stamp: u32,
}

impl NiceScratch {
    fn reset(&mut self, vertices: usize, colors: usize) {
        if self.vertex_seen.len() < vertices {
            self.vertex_seen.resize(vertices, 0);
        }
        if self.color_seen.len() < colors {
            self.color_seen.resize(colors, 0);
        }
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.vertex_seen.iter_mut().for_each(|s| *s = 0);
            self.color_seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
    }
}

/// Classifies every walk of `order` as nice or not.
///
/// Pendant-tree vertices count as uncolored unless the coloring assigns
/// them a color, in which case they are treated like any colored vertex.
/// With that reading the number of distinct colors at walk endpoints never
/// exceeds the number of walks that are not nice.
pub fn count_nice(
    order: &WalkOrder,
    coloring: &PartialColoring,
    original_count: usize,
) -> NiceCount {
    count_nice_with(&mut NiceScratch::default(), order, coloring, original_count)
}

pub fn count_nice_with(
    scratch: &mut NiceScratch,
    order: &WalkOrder,
    coloring: &PartialColoring,
    original_count: usize,
) -> NiceCount {
    scratch.reset(coloring.len(), coloring.palette_size());
    let stamp = scratch.stamp;
    let mut flags = Vec::with_capacity(order.len());
    let (mut count, mut literal_count, mut auxiliary) = (0, 0, 0);
    for e in order.endpoints() {
        let repeated_vertex = scratch.vertex_seen[e] == stamp;
        scratch.vertex_seen[e] = stamp;
        let (literal, nice) = match coloring.get(e) {
            None => (true, true),
            Some(c) => {
                let repeated_color = scratch.color_seen[c] == stamp;
                scratch.color_seen[c] = stamp;
                (repeated_vertex, repeated_vertex || repeated_color)
            }
        };
        literal_count += usize::from(literal);
        count += usize::from(nice);
        auxiliary += usize::from(nice && e >= original_count);
        flags.push(nice);
    }
    NiceCount {
        count,
        literal_count,
        auxiliary,
        flags,
    }
}

/// Which half of the path-precoloring schedule a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCase {
    /// Colored in the first phase (outside the center's region).
    RootNotX,
    /// Colored in the second phase: rooted at the center, within distance `k`.
    RootXInN,
}

/// Guaranteed number of nice walks of length at most `k` for a vertex at
/// distance `d` from its root, the root being at distance `dprime` from the
/// path center.
///
/// Outside the center region this adds up four families: prefixes of a
/// shortest path to the root, one-step detours off it, detours off the
/// precolored path beyond the root, and continuations into the center
/// region. Inside it, the mirrored precolored pairs take over.
pub fn analytic_bound_main(d: usize, dprime: usize, k: usize, case: BoundCase) -> usize {
    let (d, dp, k) = (d as i64, dprime as i64, k as i64);
    let value = match case {
        BoundCase::RootNotX => {
            let prefixes = (d - 1).min(k).max(0);
            let detours = if d >= 2 { d.min(k) - 2 } else { 0 };
            let along_path = ((d + dp).min(k) - d - 1).max(0);
            let into_center = (k - d - dp + 1).max(0);
            prefixes + detours + along_path + into_center
        }
        BoundCase::RootXInN => {
            if d >= k {
                2 * k - 3
            } else if 2 * d >= k {
                2 * d - 2
            } else {
                k - 2
            }
        }
    };
    value.max(0) as usize
}
