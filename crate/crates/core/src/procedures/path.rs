//! Path-precoloring procedure: colors `G^k` with `f(k, Δ) + 3 - k` colors
//! whenever `G` has diameter at least `2k - 2`.
//!
//! Along a shortest path `u_2 … u_k x v_1 … v_{k-1}`, both `u_i` and `v_i`
//! get color `i`. Every other vertex is colored greedily by decreasing
//! distance to `x`, except those rooted at `x` within distance `k`, which
//! go last.

use super::{
    by_decreasing_distance, check_connected_and_degree, find_far_pair, palette_to_usize, Greedy,
    PathWitness, Phase, Precondition, Procedure, ProcedureError, ProcedureReport, StepRecord,
};
use crate::bounds;
use crate::coloring::PartialColoring;
use crate::graph::{DistanceTable, Graph};
use crate::walks::{self, analytic_bound_main, AugmentedGraph, BoundCase};

/// `k` for a witness of length `2k - 2`.
fn k_of(w: &PathWitness) -> usize {
    (w.len() + 2) / 2
}

/// Precolored (vertex, 0-based color) pairs: `u_i` and `v_i` both take
/// color `i - 1`.
fn precolored_pairs(w: &PathWitness) -> Vec<(usize, usize)> {
    let k = k_of(w);
    let u = |i: usize| w.vertices[i - 2];
    let v = |i: usize| w.vertices[k - 1 + i];
    let mut pairs: Vec<(usize, usize)> = (2..=k).map(|i| (u(i), i - 1)).collect();
    pairs.extend((1..k).map(|i| (v(i), i - 1)));
    pairs
}

/// Colors `u_i` and `v_i` with color `i` (0-based: `i - 1`) and checks the
/// result is proper on the `k`-th power, `k` being the augmentation height.
pub fn precolor_main(
    ag: &AugmentedGraph,
    w: &PathWitness,
) -> Result<PartialColoring, ProcedureError> {
    let k = ag.height();
    if w.len() != 2 * k - 2 {
        return Err(Precondition::WitnessLength {
            actual: w.len(),
            expected: 2 * k - 2,
        }
        .into());
    }
    let palette = palette_to_usize(bounds::palette_main(k, ag.delta())?)?;
    let mut coloring = PartialColoring::new(ag.vertex_count(), palette);
    let pairs = precolored_pairs(w);
    for &(v, c) in &pairs {
        coloring.set(v, c);
    }
    // Only u_i and v_i share a color, for i in 2..k.
    let (us, vs) = pairs.split_at(k - 1);
    for &(u, c) in us {
        if let Some(&(v, _)) = vs.iter().find(|&&(_, cv)| cv == c) {
            if let Some(distance) = ag.graph().bfs_bounded(u, k).get(v) {
                return Err(ProcedureError::PrecoloringConflict {
                    u,
                    v,
                    color: c,
                    distance,
                });
            }
        }
    }
    Ok(coloring)
}

/// Root assignment relative to a witness path centered at `x`.
#[derive(Debug, Clone)]
pub struct Roots {
    /// Root of every original vertex, as a vertex id.
    pub root: Vec<usize>,
    /// Distance from each original vertex to its root.
    pub to_root: Vec<usize>,
    /// Membership in `N`: rooted at `x` and within distance `k` of it.
    pub in_center: Vec<bool>,
    pub center: usize,
    pub distance_to_center: DistanceTable,
}

/// Path vertices from largest to smallest: `u_2, v_{k-1}, u_3, v_{k-2}, …,
/// u_k, v_1, x`, as positions along the witness.
fn path_order_positions(k: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(2 * k - 1);
    for i in 2..=k {
        order.push(i - 2);
        order.push(k - 1 + (k + 1 - i));
    }
    order.push(k - 1);
    order
}

/// The root of `w` is the largest path vertex lying on some shortest path
/// from `w` to the center `x`.
pub fn compute_roots(g: &Graph, w: &PathWitness) -> Roots {
    let k = k_of(w);
    let x = w.vertices[k - 1];
    let order = path_order_positions(k);
    let tables: Vec<DistanceTable> = w.vertices.iter().map(|&p| g.bfs(p)).collect();
    let to_x = &tables[k - 1];
    let n = g.vertex_count();
    let mut root = vec![x; n];
    let mut to_root = vec![0; n];
    let mut in_center = vec![false; n];
    for v in 0..n {
        let dvx = to_x.at(v);
        let pos = *order
            .iter()
            .find(|&&p| tables[p].at(v) + to_x.at(w.vertices[p]) == dvx)
            .expect("x itself is always on a shortest path to x");
        root[v] = w.vertices[pos];
        to_root[v] = tables[pos].at(v);
        in_center[v] = pos == k - 1 && dvx <= k;
    }
    Roots {
        root,
        to_root,
        in_center,
        center: x,
        distance_to_center: to_x.clone(),
    }
}

impl Roots {
    /// Size of `N` taken over the whole augmented graph: pendant-tree
    /// vertices inherit the root of the vertex their tree hangs from.
    pub fn augmented_center_size(&self, ag: &AugmentedGraph, k: usize) -> usize {
        (0..ag.vertex_count())
            .filter(|&v| {
                let (a, depth) = ag.anchor(v);
                self.root[a] == self.center && self.distance_to_center.at(a) + depth <= k
            })
            .count()
    }
}

/// Runs the path-precoloring procedure on `G^k`.
///
/// Needs `G` connected with `Δ >= 3`, `k >= 3` and diameter at least
/// `2k - 2`. The returned coloring covers the original vertices only.
pub fn run_main_procedure(
    g: &Graph,
    k: usize,
) -> Result<(PartialColoring, ProcedureReport), ProcedureError> {
    let (diameter, delta) = check_connected_and_degree(g)?;
    if k < 3 {
        return Err(Precondition::K(k).into());
    }
    if diameter < 2 * k - 2 {
        return Err(Precondition::Diameter {
            diameter,
            required: 2 * k - 2,
        }
        .into());
    }
    let witness = find_far_pair(g, 2 * k - 2)?.expect("diameter checked");
    let ag = walks::augment(g, k, delta)?;
    let coloring = precolor_main(&ag, &witness)?;
    let palette = coloring.palette_size();
    let roots = compute_roots(g, &witness);

    let precolored = precolored_pairs(&witness);
    let mut steps: Vec<StepRecord> = precolored
        .iter()
        .map(|&(v, c)| StepRecord::precolored(v, c))
        .collect();
    let mut outer = Vec::new();
    let mut center = Vec::new();
    for v in 0..g.vertex_count() {
        if coloring.get(v).is_some() {
            continue;
        }
        if roots.in_center[v] {
            center.push(v);
        } else {
            outer.push(v);
        }
    }
    by_decreasing_distance(&mut outer, &roots.distance_to_center);
    by_decreasing_distance(&mut center, &roots.distance_to_center);

    let mut report = ProcedureReport {
        procedure: Procedure::Main,
        k,
        s: None,
        delta,
        palette_size: palette,
        required_nice: k - 2,
        witness: witness.clone(),
        center: vec![roots.center],
        center_set_size: roots.in_center.iter().filter(|&&b| b).count(),
        center_set_augmented_size: Some(roots.augmented_center_size(&ag, k)),
        center_to_precolor_max_distance: None,
        steps: Vec::new(),
        colors_used: 0,
        success: false,
    };

    let mut greedy = Greedy::new(g, &ag, coloring);
    let schedule = outer
        .into_iter()
        .map(|v| (v, Phase::Outer))
        .chain(center.into_iter().map(|v| (v, Phase::Center)));
    for (v, phase) in schedule {
        let r = roots.root[v];
        let d = roots.to_root[v];
        let dprime = roots.distance_to_center.at(r);
        let case = if phase == Phase::Center {
            BoundCase::RootXInN
        } else {
            BoundCase::RootNotX
        };
        let outcome = greedy.color_vertex(v)?;
        steps.push(StepRecord {
            vertex: v,
            phase,
            root: Some(r),
            d: Some(d),
            dprime: Some(dprime),
            walks: Some(outcome.walks),
            nice_count: Some(outcome.nice.count),
            literal_nice: Some(outcome.nice.literal_count),
            analytic_bound: Some(analytic_bound_main(d, dprime, k, case)),
            available: Some(outcome.available),
            color: outcome.color,
        });
        if outcome.color.is_none() {
            report.steps = steps;
            report.colors_used = greedy.coloring.truncated(g.vertex_count()).colors_used();
            return Err(ProcedureError::PaletteExhausted {
                vertex: v,
                palette,
                report: Box::new(report),
            });
        }
    }
    let coloring = greedy.coloring.truncated(g.vertex_count());
    report.steps = steps;
    report.colors_used = coloring.colors_used();
    report.success = true;
    Ok((coloring, report))
}
