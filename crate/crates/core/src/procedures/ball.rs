//! Ball-precoloring procedure: colors `G^k` with `f(k, Δ) - f(s, Δ)` colors
//! whenever `G` has diameter at least `k + 2s + 1`, for
//! `1 <= s <= (k - 5) / 12`.
//!
//! The radius-`s` balls (in the augmented graph) around the two ends of a
//! shortest path of length `k + 2s + 1` are colored by walk index, so both
//! balls reuse the same `f(s, Δ) + 1` colors. The remaining vertices are
//! colored greedily by decreasing distance to the path center, the
//! radius-`s` balls around the center last.

use std::cmp::Reverse;

use super::{
    by_decreasing_distance, check_connected_and_degree, find_far_pair, palette_to_usize, Greedy,
    Phase, Precondition, Procedure, ProcedureError, ProcedureReport, StepRecord,
};
use crate::bounds;
use crate::coloring::PartialColoring;
use crate::graph::{DistanceTable, Graph};
use crate::walks::{self, AugmentedGraph};

/// Colors the radius-`s` balls around `u1` and `v1` in the augmented graph:
/// a vertex gets the index of the first walk (empty walk first) from the
/// ball's center that ends on it. Uses colors `0..=f(s, Δ)`.
///
/// Requires `d(u1, v1) = k + 2s + 1`, `k` being the augmentation height;
/// the two balls are then more than `k` apart and the result is proper on
/// the `k`-th power of the augmented graph.
pub fn precolor_improved(
    ag: &AugmentedGraph,
    u1: usize,
    v1: usize,
    s: usize,
) -> Result<PartialColoring, ProcedureError> {
    let k = ag.height();
    if s < 1 || s > k {
        return Err(Precondition::S { s, k }.into());
    }
    let required = k + 2 * s + 1;
    let actual = ag.graph().bfs_bounded(u1, required).get(v1);
    if actual != Some(required) {
        return Err(Precondition::EndpointDistance {
            actual: actual.unwrap_or(usize::MAX),
            required,
        }
        .into());
    }
    let palette = palette_to_usize(bounds::f(s, ag.delta()) + 1u32)?;
    let mut coloring = PartialColoring::new(ag.vertex_count(), palette);
    let mut balls = [Vec::new(), Vec::new()];
    for (ball, center) in balls.iter_mut().zip([u1, v1]) {
        let order = walks::enumerate_walks(ag, center, s, true)?;
        for (index, w) in order.endpoints().enumerate() {
            if coloring.get(w).is_none() {
                coloring.set(w, index);
                ball.push(w);
            }
        }
    }

    for &a in &balls[0] {
        let (anchor, depth) = ag.anchor(a);
        let table = ag.graph().bfs_bounded(anchor, k);
        for &b in &balls[1] {
            if coloring.get(a) != coloring.get(b) {
                continue;
            }
            if let Some(distance) = ag
                .distance_via(&table, b)
                .map(|d| d + depth)
                .filter(|&d| d <= k)
            {
                return Err(ProcedureError::PrecoloringConflict {
                    u: a,
                    v: b,
                    color: coloring.get(a).unwrap(),
                    distance,
                });
            }
        }
    }
    Ok(coloring)
}

/// Runs the ball-precoloring procedure on `G^k`. The returned coloring
/// covers the original vertices only.
pub fn run_improved_procedure(
    g: &Graph,
    k: usize,
    s: usize,
) -> Result<(PartialColoring, ProcedureReport), ProcedureError> {
    let (diameter, delta) = check_connected_and_degree(g)?;
    if s < 1 || 12 * s + 5 > k {
        return Err(Precondition::S { s, k }.into());
    }
    let length = k + 2 * s + 1;
    if diameter < length {
        return Err(Precondition::Diameter {
            diameter,
            required: length,
        }
        .into());
    }
    let witness = find_far_pair(g, length)?.expect("diameter checked");
    let ag = walks::augment(g, k, delta)?;
    let palette = palette_to_usize(bounds::palette_improved(k, delta, s)?)?;
    let saving = palette_to_usize(bounds::f(s, delta) + 1u32)?;

    let ball_coloring = precolor_improved(&ag, witness.first(), witness.last(), s)?;
    let mut coloring = PartialColoring::new(ag.vertex_count(), palette);
    let mut precolored = Vec::new();
    for v in 0..ag.vertex_count() {
        if let Some(c) = ball_coloring.get(v) {
            coloring.set(v, c);
            precolored.push(v);
        }
    }

    let (cu, cv) = witness.center_positions();
    let (ut, vt) = (witness.vertices[cu], witness.vertices[cv]);
    let to_ut = g.bfs(ut);
    let to_vt = g.bfs(vt);
    let in_center: Vec<bool> = (0..g.vertex_count())
        .map(|v| to_ut.at(v) <= s || to_vt.at(v) <= s)
        .collect();

    // Every center-phase vertex must see every precolored vertex within k.
    let mut max_distance = 0;
    for z in (0..g.vertex_count()).filter(|&z| in_center[z]) {
        let table = g.bfs(z);
        for &p in &precolored {
            let d = ag.distance_via(&table, p).expect("connected");
            max_distance = max_distance.max(d);
        }
    }
    if max_distance > k {
        return Err(ProcedureError::Invariant(format!(
            "center-phase vertex at distance {max_distance} > k = {k} from a precolored vertex"
        )));
    }

    let roots = BallRoots::new(g, &witness.vertices, cu, &to_ut);
    let mut outer = Vec::new();
    let mut center = Vec::new();
    for (v, &near) in in_center.iter().enumerate() {
        if coloring.get(v).is_some() {
            continue;
        }
        if near {
            center.push(v);
        } else {
            outer.push(v);
        }
    }
    by_decreasing_distance(&mut outer, &to_ut);
    by_decreasing_distance(&mut center, &to_ut);

    let mut steps: Vec<StepRecord> = precolored
        .iter()
        .filter(|&&v| v < g.vertex_count())
        .map(|&v| StepRecord::precolored(v, coloring.get(v).unwrap()))
        .collect();
    let mut report = ProcedureReport {
        procedure: Procedure::Improved,
        k,
        s: Some(s),
        delta,
        palette_size: palette,
        required_nice: saving,
        witness: witness.clone(),
        center: if ut == vt { vec![ut] } else { vec![ut, vt] },
        center_set_size: center.len(),
        center_set_augmented_size: None,
        center_to_precolor_max_distance: Some(max_distance),
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
        let (r, d) = roots.of(v);
        let outcome = greedy.color_vertex(v)?;
        steps.push(StepRecord {
            vertex: v,
            phase,
            root: Some(r),
            d: Some(d),
            dprime: Some(to_ut.at(r)),
            walks: Some(outcome.walks),
            nice_count: Some(outcome.nice.count),
            literal_nice: Some(outcome.nice.literal_count),
            analytic_bound: Some(saving),
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

/// Roots relative to the center `u_t`: the path vertex farthest from `u_t`
/// among those on a shortest path from the vertex to `u_t`; ties prefer the
/// `u_1` side, then the lower vertex index.
struct BallRoots<'a> {
    path: &'a [usize],
    tables: Vec<DistanceTable>,
    to_center: &'a DistanceTable,
    /// Candidate positions, best first.
    ranked: Vec<usize>,
}

impl<'a> BallRoots<'a> {
    fn new(g: &Graph, path: &'a [usize], center_pos: usize, to_center: &'a DistanceTable) -> Self {
        let mut ranked: Vec<usize> = (0..path.len()).collect();
        ranked.sort_by_key(|&p| (Reverse(to_center.at(path[p])), p > center_pos, path[p]));
        BallRoots {
            path,
            tables: path.iter().map(|&p| g.bfs(p)).collect(),
            to_center,
            ranked,
        }
    }

    /// `(root, distance to root)`.
    fn of(&self, v: usize) -> (usize, usize) {
        let dv = self.to_center.at(v);
        let pos = *self
            .ranked
            .iter()
            .find(|&&p| self.tables[p].at(v) + self.to_center.at(self.path[p]) == dv)
            .expect("the center lies on every shortest path to itself");
        (self.path[pos], self.tables[pos].at(v))
    }
}
