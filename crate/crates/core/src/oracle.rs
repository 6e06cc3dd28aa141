//! Exact chromatic numbers for small graphs by DSATUR-style branch and
//! bound, plus the plain greedy upper bound.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::GapRecord;
use crate::graph::Graph;

/// Hard ceiling from the 128-bit vertex and color sets.
pub const MAX_ORACLE_VERTICES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub time_budget: Duration,
    pub branch_limit: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 40,
            time_budget: Duration::from_secs(60),
            branch_limit: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("search exceeded its {0}")]
    BudgetExceeded(&'static str),
    #[error("order is not a permutation of the vertex set")]
    InvalidPermutation,
    #[error("maximum degree {0} is below 2")]
    DegreeTooSmall(usize),
}

impl OracleError {
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            OracleError::TooManyVertices { .. } | OracleError::BudgetExceeded(_)
        )
    }
}

type Set = u128;

fn adjacency_sets(g: &Graph) -> Vec<Set> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | 1 << w))
        .collect()
}

/// Greedy clique from every start vertex, then one pass of 1-for-2 swaps on
/// the best one.
fn clique_lower_bound(adj: &[Set]) -> usize {
    let n = adj.len();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    let grow = |mut clique: Set, mut candidates: Set| {
        for &v in &by_degree {
            if candidates >> v & 1 == 1 {
                clique |= 1 << v;
                candidates &= adj[v];
            }
        }
        clique
    };
    let common = |clique: Set| {
        (0..n).fold(if n == 128 { !0 } else { (1u128 << n) - 1 }, |acc, v| {
            if clique >> v & 1 == 1 {
                acc & adj[v]
            } else {
                acc
            }
        })
    };
    let mut best: Set = 0;
    for (v, &around) in adj.iter().enumerate() {
        let c = grow(1 << v, around);
        if c.count_ones() > best.count_ones() {
            best = c;
        }
    }
    // Swap out one member u for an outside vertex adjacent to all others,
    // then try to grow again.
    for u in 0..n {
        if best >> u & 1 == 0 {
            continue;
        }
        let rest = best & !(1 << u);
        let candidates = common(rest) & !(1 << u);
        if candidates == 0 {
            continue;
        }
        let c = grow(rest, candidates);
        if c.count_ones() > best.count_ones() {
            best = c;
        }
    }
    best.count_ones() as usize
}

/// DSATUR greedy coloring; returns the number of colors used.
fn dsatur_greedy(adj: &[Set]) -> usize {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut saturation: Vec<Set> = vec![0; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    saturation[v].count_ones(),
                    adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let c = (!saturation[v]).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
        let mut rest = adj[v];
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            saturation[w] |= 1 << c;
        }
    }
    used
}

struct Search<'a> {
    adj: &'a [Set],
    color: Vec<usize>,
    /// Colors present around each vertex, with multiplicities so that
    /// uncoloring can restore them.
    around: Vec<[u16; 128]>,
    best: usize,
    lower: usize,
    branches: u64,
    limits: &'a OracleLimits,
    start: Instant,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> u32 {
        self.around[v].iter().filter(|&&m| m > 0).count() as u32
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        let mut rest = self.adj[v];
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.around[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        let mut rest = self.adj[v];
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.around[w][c] -= 1;
        }
    }

    fn pick(&self) -> Option<usize> {
        let uncolored = |w: &usize| self.color[*w] == usize::MAX;
        (0..self.adj.len()).filter(uncolored).max_by_key(|&v| {
            let mut rest = self.adj[v];
            let mut free_degree = 0;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                free_degree += u32::from(self.color[w] == usize::MAX);
            }
            (self.saturation(v), free_degree, std::cmp::Reverse(v))
        })
    }

    fn explore(&mut self, used: usize) -> Result<(), OracleError> {
        if self.best == self.lower || used >= self.best {
            return Ok(());
        }
        self.branches += 1;
        if self.branches > self.limits.branch_limit {
            return Err(OracleError::BudgetExceeded("branch limit"));
        }
        if self.branches.is_multiple_of(1024) && self.start.elapsed() > self.limits.time_budget {
            return Err(OracleError::BudgetExceeded("time budget"));
        }
        let Some(v) = self.pick() else {
            self.best = used;
            return Ok(());
        };
        // Existing colors first, then at most one fresh color.
        for c in 0..used {
            if self.around[v][c] == 0 {
                self.assign(v, c);
                let r = self.explore(used);
                self.unassign(v);
                r?;
                if self.best == self.lower {
                    return Ok(());
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            let r = self.explore(used + 1);
            self.unassign(v);
            r?;
        }
        Ok(())
    }
}

/// Exact chromatic number of `g`.
pub fn exact_chromatic(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    let limit = limits.max_vertices.min(MAX_ORACLE_VERTICES);
    if n > limit {
        return Err(OracleError::TooManyVertices { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_sets(g);
    let lower = clique_lower_bound(&adj);
    let upper = dsatur_greedy(&adj);
    if lower == upper {
        return Ok(upper);
    }
    let mut search = Search {
        adj: &adj,
        color: vec![usize::MAX; n],
        around: vec![[0; 128]; n],
        best: upper,
        lower,
        branches: 0,
        limits,
        start: Instant::now(),
    };
    search.explore(0)?;
    Ok(search.best)
}

/// Colors used by first-fit greedy in the given vertex order.
pub fn greedy_upper(g: &Graph, order: &[usize]) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(OracleError::InvalidPermutation);
    }
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if color[w] < taken.len() {
                taken[color[w]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    Ok(used)
}

/// The k-gap of `g`, with `χ(g^k)` computed exactly.
pub fn exact_gap(g: &Graph, k: usize, limits: &OracleLimits) -> Result<GapRecord, OracleError> {
    let delta = g.max_degree();
    if delta < 2 {
        return Err(OracleError::DegreeTooSmall(delta));
    }
    let limit = limits.max_vertices.min(MAX_ORACLE_VERTICES);
    if g.vertex_count() > limit {
        return Err(OracleError::TooManyVertices {
            n: g.vertex_count(),
            limit,
        });
    }
    let chi = exact_chromatic(&g.power(k), limits)?;
    Ok(GapRecord::new(k, delta, chi))
}
