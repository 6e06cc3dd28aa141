//! Simple undirected graphs over dense vertex indices, with BFS distances,
//! diameter and graph powers.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or querying a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs collapse; loops are
    /// rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Assumes `adjacency` is already sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && adjacency[v].binary_search(&u).is_ok())
        }));
        Graph { adjacency }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).reachable_count() == self.vertex_count()
    }

    pub fn bfs(&self, source: usize) -> DistanceTable {
        self.bfs_bounded(source, usize::MAX)
    }

    /// BFS that stops expanding past `max_depth`; vertices beyond it are
    /// reported unreachable.
    pub fn bfs_bounded(&self, source: usize, max_depth: usize) -> DistanceTable {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if du >= max_depth {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        DistanceTable { source, dist }
    }

    /// All-pairs distance matrix, one BFS per source.
    pub fn distance_matrix(&self) -> Vec<DistanceTable> {
        (0..self.vertex_count()).map(|s| self.bfs(s)).collect()
    }

    /// Exact diameter and a pair realizing it.
    pub fn diameter(&self) -> Result<(usize, (usize, usize)), GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        let mut best = (0, (0, 0));
        for s in 0..self.vertex_count() {
            let table = self.bfs(s);
            let (far, d) = table.farthest().ok_or(GraphError::Disconnected)?;
            if d > best.0 {
                best = (d, (s, far));
            }
        }
        Ok(best)
    }

    /// The `k`-th power: `u ~ v` iff `1 <= d(u, v) <= k`.
    pub fn power(&self, k: usize) -> Graph {
        assert!(k >= 1, "power requires k >= 1");
        let adjacency = (0..self.vertex_count())
            .map(|s| {
                let table = self.bfs_bounded(s, k);
                (0..self.vertex_count())
                    .filter(|&v| v != s && table.get(v).is_some())
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|l| l.len() + 1 == n)
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.vertex_count() {
            let mut dist = vec![UNREACHABLE; self.vertex_count()];
            let mut parent = vec![usize::MAX; self.vertex_count()];
            let mut queue = VecDeque::from([s]);
            dist[s] = 0;
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Replaces every edge by a path with `extra` internal vertices.
    pub fn subdivide(&self, extra: usize) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        let mut next = n;
        for (u, v) in self.edges() {
            let mut prev = u;
            for _ in 0..extra {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
        }
        Graph::new(next, edges).expect("subdivision of a simple graph is simple")
    }

    /// Vertices `0..count` of `self` relabeled in order: the induced
    /// subgraph on a prefix of the vertex set.
    pub fn induced_prefix(&self, count: usize) -> Graph {
        let adjacency = self.adjacency[..count]
            .iter()
            .map(|l| l.iter().copied().take_while(|&v| v < count).collect())
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) const UNREACHABLE: usize = usize::MAX;

/// Single-source BFS distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    source: usize,
    dist: Vec<usize>,
}

impl DistanceTable {
    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance to `v`, or `None` when unreachable.
    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Distance to `v`, panicking when `v` is unreachable.
    #[inline]
    pub fn at(&self, v: usize) -> usize {
        self.get(v).expect("vertex unreachable from BFS source")
    }

    pub fn reachable_count(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).count()
    }

    /// Farthest vertex (lowest index on ties), or `None` if some vertex is
    /// unreachable.
    pub fn farthest(&self) -> Option<(usize, usize)> {
        let mut best = (self.source, 0);
        for (v, &d) in self.dist.iter().enumerate() {
            if d == UNREACHABLE {
                return None;
            }
            if d > best.1 {
                best = (v, d);
            }
        }
        Some(best)
    }

    /// A shortest path from the source to `target`, following the
    /// lowest-index predecessor at each step.
    pub fn path_to(&self, g: &Graph, target: usize) -> Option<Vec<usize>> {
        let mut d = self.get(target)?;
        let mut path = vec![target];
        let mut cur = target;
        while d > 0 {
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| self.dist[w] == d - 1)
                .expect("BFS layer has a predecessor");
            path.push(cur);
            d -= 1;
        }
        path.reverse();
        Some(path)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn build_path_and_complete() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let k4 = Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::IndexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn bfs_on_path_and_cycle() {
        let p5 = generators::path(5).unwrap();
        assert_eq!(p5.bfs(0).as_slice(), &[0, 1, 2, 3, 4]);
        let c6 = generators::cycle(6).unwrap();
        for s in 0..6 {
            assert_eq!(c6.bfs(s).farthest().unwrap().1, 3);
        }
    }

    #[test]
    fn bfs_unreachable() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let t = g.bfs(0);
        assert_eq!(t.get(2), None);
        assert_eq!(t.farthest(), None);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn diameters() {
        assert_eq!(generators::cycle(10).unwrap().diameter().unwrap().0, 5);
        assert_eq!(generators::complete(4).unwrap().diameter().unwrap().0, 1);
        let (d, (a, b)) = generators::prism(10).unwrap().diameter().unwrap();
        assert_eq!(d, 6);
        assert_eq!(generators::prism(10).unwrap().bfs(a).at(b), 6);
    }

    #[test]
    fn power_of_p4() {
        let p4 = generators::path(4).unwrap();
        let sq = p4.power(2);
        assert_eq!(
            sq.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(p4.power(1), p4);
    }

    #[test]
    fn petersen_square_is_complete() {
        assert!(generators::petersen().power(2).is_complete());
    }

    #[test]
    fn path_to_is_shortest() {
        let g = generators::prism(10).unwrap();
        let t = g.bfs(0);
        let p = t.path_to(&g, 15).unwrap();
        assert_eq!(p.len(), t.at(15) + 1);
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }

    #[test]
    fn subdivision_counts() {
        let k4 = generators::complete(4).unwrap();
        let s = k4.subdivide(2);
        assert_eq!(s.vertex_count(), 4 + 6 * 2);
        assert_eq!(s.edge_count(), 18);
        assert_eq!(s.max_degree(), 3);
    }

    #[test]
    fn girth_values() {
        assert_eq!(generators::petersen().girth(), Some(5));
        assert_eq!(generators::complete(4).unwrap().girth(), Some(3));
        assert_eq!(generators::path(6).unwrap().girth(), None);
        assert_eq!(generators::prism(10).unwrap().girth(), Some(4));
    }
}
