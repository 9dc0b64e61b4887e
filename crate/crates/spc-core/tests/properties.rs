//! Cross-module property tests on randomly generated graphs and labelings.

use proptest::prelude::*;

use spc_core::families;
use spc_core::graph::Graph;
use spc_core::labeling::{evaluate, Sign, SignedLabeling};
use spc_core::search::{search_spc, SearchOptions};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let count = all_pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges = all_pairs
                .iter()
                .zip(keep.iter())
                .filter_map(|(&pair, &kept)| kept.then_some(pair));
            Graph::new(n, edges).expect("generated edges join distinct in-range vertices")
        })
    })
}

fn arb_labeling(n: usize) -> impl Strategy<Value = SignedLabeling> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
        SignedLabeling::new(
            bits.into_iter()
                .map(|b| if b { Sign::Pos } else { Sign::Neg })
                .collect(),
        )
    })
}

fn arb_graph_and_labeling(max_n: usize) -> impl Strategy<Value = (Graph, SignedLabeling)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.num_vertices();
        (Just(g), arb_labeling(n))
    })
}

proptest! {
    #[test]
    fn generated_graphs_validate_and_shake_hands(g in arb_graph(12)) {
        prop_assert!(g.validate().is_empty());
        let degree_sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(degree_sum, 2 * g.num_edges());
    }

    #[test]
    fn negation_invariance((g, l) in arb_graph_and_labeling(12)) {
        let r = evaluate(&g, &l).unwrap();
        let rn = evaluate(&g, &l.negated()).unwrap();
        prop_assert_eq!((rn.e_pos, rn.e_neg), (r.e_pos, r.e_neg));
        prop_assert_eq!((rn.v_pos, rn.v_neg), (r.v_neg, r.v_pos));
        prop_assert_eq!(rn.is_spc, r.is_spc);
    }

    #[test]
    fn cut_identity((g, l) in arb_graph_and_labeling(12)) {
        let r = evaluate(&g, &l).unwrap();
        // Independent counter: an edge is negative exactly when its
        // endpoints are in different sign classes.
        let cut = g
            .edges()
            .iter()
            .filter(|&&(u, v)| l.sign(u) != l.sign(v))
            .count();
        prop_assert_eq!(r.e_neg, cut);
        prop_assert_eq!(r.e_pos, g.num_edges() - cut);
    }

    #[test]
    fn counts_are_conserved((g, l) in arb_graph_and_labeling(12)) {
        let r = evaluate(&g, &l).unwrap();
        prop_assert_eq!(r.v_pos + r.v_neg, g.num_vertices());
        prop_assert_eq!(r.e_pos + r.e_neg, g.num_edges());
    }

    #[test]
    fn pruning_and_symmetry_reduction_are_sound(g in arb_graph(8)) {
        let raw = search_spc(&g, &SearchOptions::count()).unwrap();

        let mut unpruned = SearchOptions::count();
        unpruned.prune = false;
        let unpruned = search_spc(&g, &unpruned).unwrap();
        prop_assert_eq!(raw.count, unpruned.count);

        let mut fixed = SearchOptions::count();
        fixed.fix_first_vertex = true;
        let fixed = search_spc(&g, &fixed).unwrap();
        prop_assert_eq!(fixed.count, raw.count);
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(10)) {
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn labeling_json_round_trips(l in arb_labeling(9)) {
        let json = serde_json::to_string(&l).unwrap();
        let back: SignedLabeling = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn splitting_degree_and_cardinality_laws(g in arb_graph(10)) {
        let s = families::splitting_graph(&g);
        prop_assert_eq!(s.num_vertices(), 2 * g.num_vertices());
        prop_assert_eq!(s.num_edges(), 3 * g.num_edges());
        for v in g.vertices() {
            let d = g.degree(v).unwrap();
            prop_assert_eq!(s.degree(v).unwrap(), 2 * d);
            prop_assert_eq!(s.degree(g.num_vertices() + v).unwrap(), d);
        }
    }

    #[test]
    fn corona_cardinalities(g in arb_graph(6), m in 1usize..4) {
        let c = families::corona_empty(&g, m).unwrap();
        prop_assert_eq!(c.num_vertices(), g.num_vertices() * (1 + m));
        prop_assert_eq!(c.num_edges(), g.num_edges() + m * g.num_vertices());
        prop_assert!(c.validate().is_empty());
    }
}
