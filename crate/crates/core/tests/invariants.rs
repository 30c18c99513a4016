//! Property tests over randomly generated weighted graphs.

use std::collections::BTreeSet;

use proptest::prelude::*;

use linksum_core::community::{
    compute_foan, compute_soan, csoan_step, edge_vector, iterate_to_stability, merge_lns,
    weighted_jaccard, CommunityConfig,
};
use linksum_core::graph::{NodeId, WeightedGraph};

#[derive(Debug, Clone)]
struct RawGraph {
    edges: Vec<(usize, usize, f64)>,
    extra_nodes: usize,
}

fn raw_graphs(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = RawGraph> {
    (2..=max_nodes)
        .prop_flat_map(move |n| {
            let pair = (0..n, 0..n);
            (
                Just(n),
                proptest::collection::vec((pair, 0.1f64..1.0), 1..=max_edges),
                0usize..3,
            )
        })
        .prop_map(|(_, pairs, extra_nodes)| RawGraph {
            edges: pairs
                .into_iter()
                .map(|((u, v), w)| (u, v, w))
                .collect(),
            extra_nodes,
        })
}

fn build(raw: &RawGraph) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    let mut max_node = 0;
    for &(u, v, w) in &raw.edges {
        max_node = max_node.max(u).max(v);
        if u != v {
            let _ = g.add_edge(u, v, w);
        } else {
            g.add_node(u);
        }
    }
    for i in 0..raw.extra_nodes {
        g.add_node(max_node + 1 + i);
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn refinement_keeps_self_within_second_order(raw in raw_graphs(12, 24)) {
        let g = build(&raw);
        prop_assume!(g.edge_count() > 0);
        let config = CommunityConfig::default();
        let mut state = compute_foan(&g);
        for _ in 0..4 {
            let next = csoan_step(&g, &state, &config);
            for (&e, set) in next.per_edge() {
                prop_assert!(set.contains(&e), "edge {e} lost itself");
                let soan = compute_soan(&state, e);
                for f in set {
                    prop_assert!(*f == e || soan.contains(f));
                }
            }
            if next.per_edge() == state.per_edge() {
                break;
            }
            state = next;
        }
    }

    #[test]
    fn jaccard_is_symmetric_bounded_and_one_on_self(raw in raw_graphs(10, 16)) {
        let g = build(&raw);
        prop_assume!(g.edge_count() > 0);
        let state = compute_foan(&g);
        let vectors: Vec<_> = g
            .edge_refs()
            .map(|e| edge_vector(&g, state.neighbors(e).unwrap()))
            .collect();
        for x in &vectors {
            prop_assert!((weighted_jaccard(x, x) - 1.0).abs() < 1e-12);
            for y in &vectors {
                let forward = weighted_jaccard(x, y);
                let backward = weighted_jaccard(y, x);
                prop_assert!((forward - backward).abs() < 1e-12);
                prop_assert!((0.0..=1.0 + 1e-12).contains(&forward));
            }
        }
    }

    #[test]
    fn conductance_is_symmetric_under_complement(raw in raw_graphs(10, 20), selector in any::<u64>()) {
        let g = build(&raw);
        prop_assume!(g.node_count() >= 2);
        let all: Vec<NodeId> = g.nodes().collect();
        let s: BTreeSet<NodeId> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| selector >> (i % 64) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        prop_assume!(!s.is_empty() && s.len() < all.len());
        let complement: BTreeSet<NodeId> = all.iter().filter(|v| !s.contains(v)).copied().collect();
        match (g.conductance(&s), g.conductance(&complement)) {
            (Ok(a), Ok(b)) => prop_assert!((a - b).abs() < 1e-12),
            // One side having zero volume means the other side holds every
            // edge endpoint, so its min-volume denominator is zero too.
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "asymmetric outcome {a:?} vs {b:?}"),
        }
        if let Ok(phi) = g.conductance(&s) {
            prop_assert!((0.0..=1.0).contains(&phi));
        }
    }

    #[test]
    fn refinement_reaches_a_fixpoint_within_the_edge_bound(raw in raw_graphs(10, 20)) {
        let g = build(&raw);
        prop_assume!(g.edge_count() > 0);
        let stability = iterate_to_stability(&g, &CommunityConfig::default());
        prop_assert!(stability.converged, "no fixpoint within {} steps", g.edge_count());
        prop_assert!(stability.iterations <= g.edge_count());
    }

    #[test]
    fn merging_never_raises_the_minimum_conductance(raw in raw_graphs(10, 20)) {
        let g = build(&raw);
        prop_assume!(g.edge_count() > 0);
        let state = iterate_to_stability(&g, &CommunityConfig::default()).state;
        let sets: Vec<BTreeSet<NodeId>> = state
            .per_edge()
            .values()
            .map(|edges| linksum_core::community::link_node_set(&g, edges))
            .collect();
        let inputs_min = sets
            .iter()
            .filter_map(|s| g.conductance(s).ok())
            .fold(f64::INFINITY, f64::min);
        let outcome = merge_lns(&g, &sets).unwrap();
        if inputs_min.is_finite() && !outcome.communities.is_empty() {
            let output_min = outcome
                .communities
                .iter()
                .map(|c| c.conductance)
                .fold(f64::INFINITY, f64::min);
            prop_assert!(output_min <= inputs_min + 1e-12);
        }
        // Output sets are pairwise distinct.
        let distinct: BTreeSet<_> = outcome.communities.iter().map(|c| c.members.clone()).collect();
        prop_assert_eq!(distinct.len(), outcome.communities.len());
    }
}
