//! Named graph families used as test corpus and by the `generate` command.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

/// Retry budget for the pairing model before giving up.
pub const RANDOM_REGULAR_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `C_n` times `K_2`.
    Prism(usize),
    Petersen,
    /// Root with `arity` children, every other internal node with
    /// `arity - 1` children, `height` levels below the root.
    DaryTree {
        arity: usize,
        height: usize,
    },
    RandomRegular {
        n: usize,
        degree: usize,
        seed: u64,
    },
    /// Random tree plus `extra` edges, degrees capped at `max_degree`.
    RandomSparse {
        n: usize,
        max_degree: usize,
        extra: usize,
        seed: u64,
    },
}

impl GraphKind {
    pub fn generate(self) -> Result<Graph, GraphError> {
        match self {
            GraphKind::Path(n) => path(n),
            GraphKind::Cycle(n) => cycle(n),
            GraphKind::Complete(n) => complete(n),
            GraphKind::Prism(n) => prism(n),
            GraphKind::Petersen => Ok(petersen()),
            GraphKind::DaryTree { arity, height } => dary_tree(arity, height),
            GraphKind::RandomRegular { n, degree, seed } => random_regular(n, degree, seed),
            GraphKind::RandomSparse {
                n,
                max_degree,
                extra,
                seed,
            } => random_sparse(n, max_degree, extra, seed),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "path {n}"),
            GraphKind::Cycle(n) => write!(f, "cycle {n}"),
            GraphKind::Complete(n) => write!(f, "complete {n}"),
            GraphKind::Prism(n) => write!(f, "prism {n}"),
            GraphKind::Petersen => write!(f, "petersen"),
            GraphKind::DaryTree { arity, height } => write!(f, "dary_tree {arity} {height}"),
            GraphKind::RandomRegular { n, degree, seed } => {
                write!(f, "random_regular {n} {degree} --seed {seed}")
            }
            GraphKind::RandomSparse {
                n,
                max_degree,
                extra,
                seed,
            } => write!(f, "random_sparse {n} {max_degree} {extra} --seed {seed}"),
        }
    }
}

/// Parses `"<kind> <params...>"`, e.g. `"prism 10"` or `"random_regular 12 3 7"`
/// (the seed is optional and defaults to 0).
impl FromStr for GraphKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| invalid("missing generator kind"))?;
        let params = parts
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| invalid(format!("bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GraphKind::from_parts(name, &params)
    }
}

impl GraphKind {
    pub fn from_parts(name: &str, params: &[u64]) -> Result<Self, GraphError> {
        let arity = |want: usize| -> Result<(), GraphError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(invalid(format!(
                    "{name} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = |i: usize| params[i] as usize;
        Ok(match name {
            "path" => {
                arity(1)?;
                GraphKind::Path(p(0))
            }
            "cycle" => {
                arity(1)?;
                GraphKind::Cycle(p(0))
            }
            "complete" => {
                arity(1)?;
                GraphKind::Complete(p(0))
            }
            "prism" => {
                arity(1)?;
                GraphKind::Prism(p(0))
            }
            "petersen" => {
                arity(0)?;
                GraphKind::Petersen
            }
            "dary_tree" => {
                arity(2)?;
                GraphKind::DaryTree {
                    arity: p(0),
                    height: p(1),
                }
            }
            "random_regular" => {
                if params.len() != 2 && params.len() != 3 {
                    return Err(invalid("random_regular takes n d [seed]"));
                }
                GraphKind::RandomRegular {
                    n: p(0),
                    degree: p(1),
                    seed: params.get(2).copied().unwrap_or(0),
                }
            }
            "random_sparse" => {
                if params.len() != 3 && params.len() != 4 {
                    return Err(invalid("random_sparse takes n max_degree extra [seed]"));
                }
                GraphKind::RandomSparse {
                    n: p(0),
                    max_degree: p(1),
                    extra: p(2),
                    seed: params.get(3).copied().unwrap_or(0),
                }
            }
            other => return Err(invalid(format!("unknown generator {other:?}"))),
        })
    }
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(msg.into())
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("complete needs n >= 1"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Outer cycle on `0..n`, inner cycle on `n..2n`, spokes `i -- n + i`.
pub fn prism(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("prism needs n >= 3"));
    }
    let edges = (0..n).flat_map(|i| {
        let j = (i + 1) % n;
        [(i, j), (n + i, n + j), (i, n + i)]
    });
    Graph::new(2 * n, edges)
}

pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::new(10, edges).expect("petersen edges are valid")
}

/// Vertices are numbered level by level; the root is 0.
pub fn dary_tree(arity: usize, height: usize) -> Result<Graph, GraphError> {
    if arity < 2 {
        return Err(invalid("dary_tree needs arity >= 2"));
    }
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next = 1;
    for depth in 0..height {
        let children = if depth == 0 { arity } else { arity - 1 };
        let mut next_level = Vec::with_capacity(level.len() * children);
        for &parent in &level {
            for _ in 0..children {
                edges.push((parent, next));
                next_level.push(next);
                next += 1;
            }
        }
        level = next_level;
    }
    Graph::new(next, edges)
}

/// Pairing (configuration) model: shuffle `n * degree` half-edges, pair them
/// up, reject on loops or parallel edges. Deterministic for a given seed.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph, GraphError> {
    if degree >= n || (n * degree) % 2 == 1 {
        return Err(invalid(format!(
            "random_regular needs degree < n and n*degree even (n={n}, degree={degree})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    'retry: for _ in 0..RANDOM_REGULAR_RETRIES {
        points.shuffle(&mut rng);
        let mut adjacency = vec![Vec::with_capacity(degree); n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adjacency[u].contains(&v) {
                continue 'retry;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        return Ok(Graph::from_sorted_adjacency(adjacency));
    }
    Err(invalid(format!(
        "no simple {degree}-regular graph on {n} vertices after {RANDOM_REGULAR_RETRIES} pairings"
    )))
}

/// Connected graph: vertex `i` attaches to a uniformly chosen earlier vertex
/// with spare degree, then up to `extra` random chords are added (a chord
/// that would be a loop, a repeat or exceed `max_degree` is skipped).
pub fn random_sparse(
    n: usize,
    max_degree: usize,
    extra: usize,
    seed: u64,
) -> Result<Graph, GraphError> {
    if n == 0 || (n > 2 && max_degree < 2) || (n == 2 && max_degree < 1) {
        return Err(invalid(format!(
            "random_sparse needs n >= 1 and max_degree >= 2 (n={n}, max_degree={max_degree})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1 + extra);
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let &u = open
            .choose(&mut rng)
            .expect("a path always leaves an open vertex");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    let mut g = Graph::new(n, edges.iter().copied())?;
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || degree[u] >= max_degree || degree[v] >= max_degree || g.has_edge(u, v) {
            continue;
        }
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
        g = Graph::new(n, edges.iter().copied())?;
    }
    Ok(g)
}
