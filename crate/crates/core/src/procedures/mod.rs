//! Greedy colorings of `G^k` driven by a long shortest path.
//!
//! Both procedures fix a shortest path between two far-apart vertices,
//! precolor part of its neighborhood, then color every remaining vertex
//! greedily by decreasing distance to the middle of the path. At each step
//! the nice walks from the current vertex are counted and logged next to
//! the guaranteed lower bound, so a run doubles as an audit of the counting
//! argument behind the palette size.

mod ball;
mod path;
mod report;

pub use ball::{precolor_improved, run_improved_procedure};
pub use path::{compute_roots, precolor_main, run_main_procedure, Roots};
pub use report::{NiceShortfall, Phase, Procedure, ProcedureReport, StepRecord};

use thiserror::Error;

use crate::bounds::BoundsError;
use crate::coloring::PartialColoring;
use crate::graph::{DistanceTable, Graph, GraphError};
use crate::walks::{self, AugmentedGraph, NiceCount, NiceScratch, WalkError};

/// A precondition the input graph or parameters failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("maximum degree {0} is below 3")]
    MaxDegree(usize),
    #[error("k = {0} is below 3")]
    K(usize),
    #[error("s = {s} is outside 1..=(k-5)/12 for k = {k}")]
    S { s: usize, k: usize },
    #[error("diameter {diameter} is below the required {required}")]
    Diameter { diameter: usize, required: usize },
    #[error("endpoint distance {actual} differs from the required {required}")]
    EndpointDistance { actual: usize, required: usize },
    #[error("witness path has length {actual}, expected {expected}")]
    WitnessLength { actual: usize, expected: usize },
}

#[derive(Debug, Error)]
pub enum ProcedureError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(#[from] Precondition),
    #[error("palette exhausted at vertex {vertex} (palette {palette})")]
    PaletteExhausted {
        vertex: usize,
        palette: usize,
        report: Box<ProcedureReport>,
    },
    #[error("precoloring is not proper: vertices {u} and {v} share color {color} at distance {distance}")]
    PrecoloringConflict {
        u: usize,
        v: usize,
        color: usize,
        distance: usize,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// A shortest path, given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Positions of the middle vertex or the two middle vertices.
    pub fn center_positions(&self) -> (usize, usize) {
        let l = self.len();
        (l / 2, l.div_ceil(2))
    }

    /// Whether consecutive vertices are adjacent and the endpoints are at
    /// distance exactly `len()`.
    pub fn is_shortest_in(&self, g: &Graph) -> bool {
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.bfs(self.first()).get(self.last()) == Some(self.len())
    }
}

/// A shortest path with exactly `target_distance` edges, cut from a diameter
/// witness, or `None` when the diameter is smaller.
pub fn find_far_pair(
    g: &Graph,
    target_distance: usize,
) -> Result<Option<PathWitness>, ProcedureError> {
    let (diameter, (a, b)) = g.diameter().map_err(|e| match e {
        GraphError::Disconnected | GraphError::Empty => Precondition::Disconnected,
        other => unreachable!("diameter error {other}"),
    })?;
    if diameter < target_distance {
        return Ok(None);
    }
    let mut vertices = g.bfs(a).path_to(g, b).expect("connected");
    vertices.truncate(target_distance + 1);
    Ok(Some(PathWitness { vertices }))
}

pub(crate) fn check_connected_and_degree(g: &Graph) -> Result<(usize, usize), Precondition> {
    let diameter = match g.diameter() {
        Ok((d, _)) => d,
        Err(_) => return Err(Precondition::Disconnected),
    };
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Precondition::MaxDegree(delta));
    }
    Ok((diameter, delta))
}

pub(crate) fn palette_to_usize(p: num_bigint::BigUint) -> Result<usize, ProcedureError> {
    num_traits::ToPrimitive::to_usize(&p)
        .filter(|&p| p <= walks::MEMORY_GUARD)
        .ok_or_else(|| {
            WalkError::TooLarge {
                what: "palette",
                count: p.to_string(),
            }
            .into()
        })
}

/// State shared by the greedy phase of both procedures.
pub(crate) struct Greedy<'a> {
    /// The original graph; pendant trees never shorten distances between
    /// original vertices, so BFS here gives augmented distances among them.
    original: &'a Graph,
    ag: &'a AugmentedGraph,
    pub coloring: PartialColoring,
    scratch: NiceScratch,
    forbidden: Vec<u32>,
    stamp: u32,
    /// Colored pendant-tree vertices, which BFS on the original graph misses.
    colored_auxiliary: Vec<usize>,
}

pub(crate) struct StepOutcome {
    pub nice: NiceCount,
    pub walks: usize,
    pub available: usize,
    pub color: Option<usize>,
}

impl<'a> Greedy<'a> {
    pub fn new(original: &'a Graph, ag: &'a AugmentedGraph, coloring: PartialColoring) -> Self {
        let colored_auxiliary = (ag.original_count()..ag.vertex_count())
            .filter(|&v| coloring.get(v).is_some())
            .collect();
        let palette = coloring.palette_size();
        Greedy {
            original,
            ag,
            coloring,
            scratch: NiceScratch::default(),
            forbidden: vec![0; palette],
            stamp: 0,
            colored_auxiliary,
        }
    }

    /// Counts nice walks from `v`, then gives it the smallest color absent
    /// from every colored vertex within augmented distance `k`.
    pub fn color_vertex(&mut self, v: usize) -> Result<StepOutcome, ProcedureError> {
        let k = self.ag.height();
        let order = walks::enumerate_walks(self.ag, v, k, false)?;
        let nice = walks::count_nice_with(
            &mut self.scratch,
            &order,
            &self.coloring,
            self.ag.original_count(),
        );

        self.stamp += 1;
        let stamp = self.stamp;
        let table = self.original.bfs_bounded(v, k);
        for u in 0..self.ag.original_count() {
            if let (Some(_), Some(c)) = (table.get(u), self.coloring.get(u)) {
                self.forbidden[c] = stamp;
            }
        }
        for &a in &self.colored_auxiliary {
            if self.ag.distance_via(&table, a).is_some_and(|d| d <= k) {
                self.forbidden[self.coloring.get(a).unwrap()] = stamp;
            }
        }
        let mut available = 0;
        let mut color = None;
        for (c, &mark) in self.forbidden.iter().enumerate() {
            if mark != stamp {
                available += 1;
                color.get_or_insert(c);
            }
        }
        if let Some(c) = color {
            self.coloring.set(v, c);
        }
        Ok(StepOutcome {
            walks: order.len(),
            nice,
            available,
            color,
        })
    }
}

/// Sorts by decreasing distance, ties by increasing index.
pub(crate) fn by_decreasing_distance(vertices: &mut [usize], table: &DistanceTable) {
    vertices.sort_by_key(|&v| (std::cmp::Reverse(table.at(v)), v));
}
