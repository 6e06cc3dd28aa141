//! Inputs shared by the benchmarks.

use powercolor::generators;
use powercolor::Graph;

/// Cubic graphs with diameter large enough for the path procedure at `k`.
pub fn path_procedure_inputs(k: usize) -> Vec<(String, Graph)> {
    [12, 24, 48]
        .into_iter()
        .map(|n| (format!("prism{n}"), generators::prism(n).unwrap()))
        .chain([(
            "sparse60".to_string(),
            generators::random_sparse(60, 3, 4, 11).unwrap(),
        )])
        .filter(|(_, g)| g.diameter().unwrap().0 + 2 >= 2 * k)
        .collect()
}

/// Powers whose chromatic number the oracle has to search for.
pub fn oracle_inputs() -> Vec<(String, Graph)> {
    vec![
        ("cycle13^2".into(), generators::cycle(13).unwrap().power(2)),
        ("cycle17^3".into(), generators::cycle(17).unwrap().power(3)),
        ("petersen^2".into(), generators::petersen().power(2)),
        (
            "regular20^2".into(),
            generators::random_regular(20, 3, 3).unwrap().power(2),
        ),
    ]
}
