use std::collections::{BTreeMap, HashSet};

use powercolor::{exact_gap, from_graph6, generators, to_graph6, OracleLimits};

const CUBIC: &str = include_str!("data/cubic_connected_le10.g6");

#[test]
fn fixture_is_the_cubic_census() {
    let mut by_order = BTreeMap::new();
    let mut seen = HashSet::new();
    for line in CUBIC.lines() {
        let g = from_graph6(line).unwrap();
        assert!(g.is_connected());
        assert!((0..g.vertex_count()).all(|v| g.degree(v) == 3));
        assert!(seen.insert(to_graph6(&g).unwrap()));
        *by_order.entry(g.vertex_count()).or_insert(0) += 1;
    }
    assert_eq!(
        by_order.into_iter().collect::<Vec<_>>(),
        vec![(4, 1), (6, 2), (8, 5), (10, 19)]
    );
}

#[test]
fn only_petersen_has_small_square_gap() {
    let limits = OracleLimits::default();
    let petersen_spectrum = distance_profile(&generators::petersen());
    let mut small = Vec::new();
    for line in CUBIC.lines() {
        let g = from_graph6(line).unwrap();
        let record = exact_gap(&g, 2, &limits).unwrap();
        if record.gap < 2.into() {
            small.push((g, record.chi));
        }
    }
    assert_eq!(small.len(), 1);
    let (g, chi) = &small[0];
    assert_eq!(*chi, 10);
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(g.girth(), Some(5));
    assert_eq!(distance_profile(g), petersen_spectrum);
}

fn distance_profile(g: &powercolor::Graph) -> Vec<usize> {
    let mut profile: Vec<usize> = g
        .distance_matrix()
        .iter()
        .flat_map(|t| t.as_slice().to_vec())
        .collect();
    profile.sort_unstable();
    profile
}
