use powercolor::bounds;
use powercolor::generators::{self, random_sparse};
use powercolor::procedures::{precolor_improved, precolor_main, Phase, Precondition};
use powercolor::walks::{self, analytic_bound_main, BoundCase};
use powercolor::{
    find_far_pair, run_improved_procedure, run_main_procedure, verify_coloring, Graph,
    ProcedureError,
};

fn main_corpus(k: usize) -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (8..=20).map(|n| generators::prism(n).unwrap()).collect();
    for (height, extra) in [(2, 1), (2, 2), (3, 1)] {
        corpus.push(generators::dary_tree(3, height).unwrap().subdivide(extra));
    }
    corpus.extend((0..12).map(|seed| random_sparse(28, 3 + (seed as usize % 2), 3, seed).unwrap()));
    corpus.retain(|g| g.max_degree() >= 3 && g.diameter().unwrap().0 >= 2 * k - 2);
    corpus
}

#[test]
fn prism_ten_cube_power() {
    let g = generators::prism(10).unwrap();
    let (coloring, report) = run_main_procedure(&g, 3).unwrap();
    assert_eq!(report.palette_size, 21);
    assert!(coloring.colors_used() <= 21);
    assert!(verify_coloring(&g, 3, &coloring).unwrap().is_empty());
    assert!(report.success);
    assert!(report.nice_shortfalls().is_empty());
}

#[test]
fn complete_graph_has_small_diameter() {
    let err = run_main_procedure(&generators::complete(4).unwrap(), 3).unwrap_err();
    assert!(matches!(
        err,
        ProcedureError::PreconditionViolated(Precondition::Diameter {
            diameter: 1,
            required: 4
        })
    ));
    assert!(err.to_string().contains("diameter"));
}

#[test]
fn main_procedure_over_corpus() {
    for k in [3, 4] {
        let corpus = main_corpus(k);
        assert!(corpus.len() >= 20, "k={k}: only {} graphs", corpus.len());
        for g in &corpus {
            let (coloring, report) = run_main_procedure(g, k).unwrap();
            let palette = bounds::palette_main(k, g.max_degree()).unwrap();
            assert!(num_bigint::BigUint::from(coloring.colors_used()) <= palette);
            assert!(verify_coloring(g, k, &coloring).unwrap().is_empty());
            assert!(
                report.nice_shortfalls().is_empty(),
                "{:?}",
                report.nice_shortfalls()
            );
            assert!(report
                .greedy_steps()
                .all(|s| s.nice_count.unwrap() + 2 >= k));
            let greedy = report.greedy_steps().count();
            let pre = report
                .steps
                .iter()
                .filter(|s| s.phase == Phase::Precolor)
                .count();
            assert_eq!(greedy + pre, g.vertex_count());
        }
    }
}

#[test]
fn center_phase_bound_is_recorded() {
    let g = generators::prism(14).unwrap();
    let (_, report) = run_main_procedure(&g, 4).unwrap();
    for s in report.greedy_steps().filter(|s| s.phase == Phase::Center) {
        assert_eq!(
            s.analytic_bound,
            Some(analytic_bound_main(s.d.unwrap(), 0, 4, BoundCase::RootXInN))
        );
    }
    let center = report
        .greedy_steps()
        .filter(|s| s.phase == Phase::Center)
        .count();
    assert_eq!(center, report.center_set_size);
}

#[test]
fn schedule_is_by_decreasing_distance() {
    let g = random_sparse(30, 3, 2, 5).unwrap();
    let k = 3;
    let (_, report) = run_main_procedure(&g, k).unwrap();
    let x = report.center[0];
    let table = g.bfs(x);
    for phase in [Phase::Outer, Phase::Center] {
        let distances: Vec<usize> = report
            .greedy_steps()
            .filter(|s| s.phase == phase)
            .map(|s| table.at(s.vertex))
            .collect();
        assert!(
            distances.windows(2).all(|w| w[0] >= w[1]),
            "{phase}: {distances:?}"
        );
    }
}

#[test]
fn path_precoloring_is_proper_on_corpus() {
    for k in [3, 4, 5] {
        for g in main_corpus(k) {
            let ag = walks::augment(&g, k, g.max_degree()).unwrap();
            let w = find_far_pair(&g, 2 * k - 2).unwrap().unwrap();
            assert!(w.is_shortest_in(&g));
            let c = precolor_main(&ag, &w).unwrap();
            assert_eq!(c.colored_count(), 2 * k - 1 - 1);
            assert!(verify_coloring(&g, k, &fill_rest(&c, g.vertex_count()))
                .unwrap()
                .is_empty());
        }
    }
}

#[test]
fn ball_precoloring_is_proper_on_corpus() {
    let mut graphs = vec![
        generators::prism(44).unwrap(),
        generators::prism(30).unwrap(),
    ];
    graphs.push(generators::dary_tree(3, 2).unwrap().subdivide(3));
    graphs.extend((0..6).map(|seed| random_sparse(60, 3, 2, seed).unwrap()));
    for k in [3, 5, 8] {
        for g in &graphs {
            let s = 1;
            let Some(w) = find_far_pair(g, k + 2 * s + 1).unwrap() else {
                continue;
            };
            let ag = walks::augment(g, k, 3).unwrap();
            let c = precolor_improved(&ag, w.first(), w.last(), s).unwrap();
            assert!(c.colors_used() <= 4);
            assert!(verify_coloring(g, k, &fill_rest(&c, g.vertex_count()))
                .unwrap()
                .is_empty());
        }
    }
}

/// Gives every uncolored original vertex its own fresh color.
fn fill_rest(c: &powercolor::PartialColoring, n: usize) -> powercolor::PartialColoring {
    let base = c.palette_size();
    let colors: Vec<usize> = (0..n).map(|v| c.get(v).unwrap_or(base + v)).collect();
    powercolor::PartialColoring::from_colors(colors, base + n)
}

#[test]
fn improved_procedure_on_long_prism() {
    let g = generators::prism(44).unwrap();
    assert_eq!(g.diameter().unwrap().0, 23);
    let (coloring, report) = run_improved_procedure(&g, 17, 1).unwrap();
    assert_eq!(report.palette_size, 393_213 - 3);
    assert!(verify_coloring(&g, 17, &coloring).unwrap().is_empty());
    assert_eq!(report.required_nice, 4);
    assert!(report.greedy_steps().all(|s| s.nice_count.unwrap() >= 4));
    assert!(report.center_to_precolor_max_distance.unwrap() <= 17);
    assert_eq!(report.center.len(), 1);
}
