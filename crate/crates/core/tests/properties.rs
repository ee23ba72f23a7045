mod common;

use amcs_core::search::SearchParams;
use amcs_core::{Graph, SearchSpace, SeededRng};
use common::*;
use proptest::prelude::*;

fn tree(seed: u64, n: usize) -> Graph {
    Graph::random_tree(n, &mut SeededRng::new(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_runs_are_closed_monotone_and_reproducible(
        seed in any::<u64>(),
        n in 3usize..7,
        conj in prop::sample::select(vec![1u8, 3, 4, 5, 6, 7, 9, 10]),
        trees in any::<bool>(),
    ) {
        let trees = trees || matches!(conj, 3 | 5 | 6);
        let params = SearchParams { max_depth: 3, max_level: 2, trees_only: trees, seed, ..SearchParams::default() };
        prop_assert_eq!(check_search_run(&tree(seed, n), conj, &params), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nmcs_never_worse(
        seed in any::<u64>(),
        n in 3usize..9,
        depth in 0usize..4,
        level in 0usize..3,
        conj in prop::sample::select(vec![1u8, 4, 5, 7, 9, 10]),
        trees in any::<bool>(),
    ) {
        let space = if trees || conj == 5 { SearchSpace::Trees } else { SearchSpace::ConnectedGraphs };
        let level = if space == SearchSpace::ConnectedGraphs && n > 6 { level.min(1) } else { level };
        prop_assert_eq!(check_nmcs_not_worse(&tree(seed, n), conj, depth, level, space, seed), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trips_trees(seed in any::<u64>(), n in 1usize..120) {
        prop_assert_eq!(check_graph6_round_trip(&tree(seed, n)), Ok(()));
    }

    #[test]
    fn graph6_round_trips_graphs(seed in any::<u64>(), n in 1usize..70, p in 0.0f64..1.0) {
        let g = random_graph(n, p, &mut SeededRng::new(seed));
        prop_assert_eq!(check_graph6_round_trip(&g), Ok(()));
    }
}

proptest! {
    #[test]
    fn tree_identity_s1_equals_s9(seed in any::<u64>(), n in 3usize..40) {
        prop_assert_eq!(check_tree_identity(&tree(seed, n)), Ok(()));
    }
}

#[test]
fn star_equality_cases() {
    for n in 3..=30 {
        assert_eq!(check_star_equality(n), Ok(()));
    }
}
