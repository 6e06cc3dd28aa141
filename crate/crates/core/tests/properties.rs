use num_bigint::BigUint;
use powercolor::bounds;
use powercolor::generators::{self, random_sparse};
use powercolor::walks::{self, count_nice};
use powercolor::{
    exact_chromatic, from_graph6, greedy_upper, to_graph6, verify_coloring, Graph, OracleLimits,
    PartialColoring,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

fn arb_connected(max_degree: usize) -> impl Strategy<Value = Graph> {
    (4usize..26, 0usize..8, any::<u64>())
        .prop_map(move |(n, extra, seed)| random_sparse(n, max_degree, extra, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let text = to_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn first_power_is_identity(g in arb_graph(30)) {
        prop_assert_eq!(g.power(1), g);
    }

    #[test]
    fn power_at_diameter_is_complete(g in arb_connected(4)) {
        let (diameter, _) = g.diameter().unwrap();
        prop_assert!(g.power(diameter.max(1)).is_complete());
        if diameter >= 2 {
            prop_assert!(!g.power(diameter - 1).is_complete());
        }
    }

    #[test]
    fn power_degree_at_most_f(g in arb_connected(4), k in 1usize..5) {
        let delta = g.max_degree().max(2);
        prop_assert!(BigUint::from(g.power(k).max_degree()) <= bounds::f(k, delta));
    }

    #[test]
    fn walk_count_law(g in arb_connected(4), slack in 0usize..2, len in 1usize..5) {
        let delta = g.max_degree().max(3) + slack;
        let ag = walks::augment(&g, len, delta).unwrap();
        let expected = bounds::f_usize(len, delta).unwrap();
        for v in 0..g.vertex_count() {
            let order = walks::enumerate_walks(&ag, v, len, false).unwrap();
            prop_assert_eq!(order.len(), expected);
        }
    }

    #[test]
    fn non_nice_walks_are_first_colors(g in arb_connected(3), seed in any::<u64>(), k in 2usize..5) {
        prop_assume!(g.max_degree() == 3);
        let ag = walks::augment(&g, k, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let palette = 6;
        let mut coloring = PartialColoring::new(ag.vertex_count(), palette);
        for v in 0..ag.vertex_count() {
            if rng.gen_bool(0.4) {
                coloring.set(v, rng.gen_range(0..palette));
            }
        }
        let order = walks::enumerate_walks(&ag, 0, k, false).unwrap();
        let nice = count_nice(&order, &coloring, ag.original_count());
        let mut seen = [false; 6];
        order.endpoints().filter_map(|e| coloring.get(e)).for_each(|c| seen[c] = true);
        let distinct = seen.iter().filter(|&&s| s).count();
        prop_assert_eq!(order.len() - nice.count, distinct);
        prop_assert!(nice.literal_count <= nice.count);

        // Uncoloring never lowers the count.
        let victim = order.endpoint(rng.gen_range(0..order.len()));
        let mut fewer = coloring.clone();
        fewer.clear(victim);
        prop_assert!(count_nice(&order, &fewer, ag.original_count()).count >= nice.count);
    }

    #[test]
    fn oracle_between_clique_and_greedy(g in arb_graph(11), seed in any::<u64>()) {
        let chi = exact_chromatic(&g, &OracleLimits::default()).unwrap();
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let greedy = greedy_upper(&g, &order).unwrap();
        prop_assert!(chi <= greedy);
        prop_assert!(greedy <= g.max_degree() + 1);
        if g.edge_count() > 0 {
            prop_assert!(chi >= 2);
        }
        if g.max_degree() >= 3 && g.is_connected() && !g.is_complete() {
            prop_assert!(chi <= g.max_degree());
        }
    }

    #[test]
    fn greedy_power_coloring_verifies(g in arb_connected(3), k in 1usize..4) {
        let p = g.power(k);
        let mut colors = vec![0usize; g.vertex_count()];
        for v in 0..g.vertex_count() {
            let taken: Vec<usize> = p.neighbors(v).iter().filter(|&&w| w < v).map(|&w| colors[w]).collect();
            colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
        }
        let palette = colors.iter().max().unwrap() + 1;
        let coloring = PartialColoring::from_colors(colors, palette);
        prop_assert!(verify_coloring(&g, k, &coloring).unwrap().is_empty());
    }
}

#[test]
fn f_summation_matches_fraction() {
    for delta in 3..=10usize {
        for k in 1..=20usize {
            let d = BigUint::from(delta);
            let fraction =
                &d * (BigUint::from(delta - 1).pow(k as u32) - 1u32) / BigUint::from(delta - 2);
            assert_eq!(bounds::f(k, delta), fraction, "k={k} delta={delta}");
        }
    }
}

#[test]
fn f_growth_ratio_tends_to_delta_minus_one() {
    for delta in [3usize, 4, 7] {
        let ratio = |s: usize| {
            let a = bounds::f_usize(s + 1, delta).unwrap() as f64;
            a / bounds::f_usize(s, delta).unwrap() as f64
        };
        let target = (delta - 1) as f64;
        assert!((ratio(12) - target).abs() < (ratio(2) - target).abs());
        assert!((ratio(12) - target).abs() < 1e-3);
    }
}

#[test]
fn walk_law_on_generator_corpus() {
    let corpus = [
        generators::petersen(),
        generators::prism(7).unwrap(),
        generators::dary_tree(3, 3).unwrap(),
        generators::dary_tree(4, 2).unwrap(),
        generators::cycle(9).unwrap(),
        generators::random_regular(16, 3, 4).unwrap(),
        generators::random_regular(14, 4, 1).unwrap(),
    ];
    for g in &corpus {
        let delta = g.max_degree().max(3);
        for len in 1..=4 {
            let ag = walks::augment(g, len, delta).unwrap();
            for v in 0..g.vertex_count() {
                let order = walks::enumerate_walks(&ag, v, len, false).unwrap();
                assert_eq!(order.len(), bounds::f_usize(len, delta).unwrap());
                assert!(order.walks().all(|w| w.is_non_backtracking_in(ag.graph())));
            }
        }
    }
}
