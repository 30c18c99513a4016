//! Golden tests over the ten-node example network: first-order neighbor
//! sets, the first constrained refinement step, the stable state, node
//! projections, conductances, merging, and selection all pinned to
//! hand-checked values.

use std::collections::BTreeSet;

use linksum_core::community::{
    self, compute_foan, csoan_step, detect_communities, edge_vector, iterate_to_stability,
    link_node_set, weighted_jaccard, Community, CommunityConfig,
};
use linksum_core::graph::{EdgeRef, NodeId, WeightedGraph};
use linksum_core::rank::{select_influential, RankBudget};

const EDGES: [(usize, usize, f64); 18] = [
    (1, 2, 9.0),
    (1, 3, 6.0),
    (1, 4, 5.0),
    (2, 3, 7.0),
    (2, 4, 2.0),
    (3, 4, 5.0),
    (4, 5, 2.0),
    (4, 6, 2.0),
    (4, 7, 5.0),
    (5, 6, 2.0),
    (5, 7, 8.0),
    (6, 7, 5.0),
    (7, 8, 9.0),
    (7, 9, 3.0),
    (7, 10, 9.0),
    (8, 9, 2.0),
    (8, 10, 4.0),
    (9, 10, 6.0),
];

const FOAN_TABLE: [&[usize]; 18] = [
    &[1, 2, 3, 4, 5],
    &[1, 2, 3, 4, 6],
    &[1, 2, 3, 5, 6, 7, 8, 9],
    &[1, 2, 4, 5, 6],
    &[1, 3, 4, 5, 6, 7, 8, 9],
    &[2, 3, 4, 5, 6, 7, 8, 9],
    &[3, 5, 6, 7, 8, 9, 10, 11],
    &[3, 5, 6, 7, 8, 9, 10, 12],
    &[3, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15],
    &[7, 8, 10, 11, 12],
    &[7, 9, 10, 11, 12, 13, 14, 15],
    &[8, 9, 10, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15, 16, 17],
    &[9, 11, 12, 13, 14, 15, 16, 18],
    &[9, 11, 12, 13, 14, 15, 17, 18],
    &[13, 14, 16, 17, 18],
    &[13, 15, 16, 17, 18],
    &[14, 15, 16, 17, 18],
];

const FIRST_CSOAN_TABLE: [&[usize]; 18] = [
    &[1, 2, 3, 4, 5],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5],
    &[1, 2, 3, 4, 5, 6],
    &[2, 3, 5, 6, 8],
    &[7, 8, 9],
    &[6, 7, 8],
    &[7, 9, 11, 12, 13, 14, 15],
    &[10],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15, 17],
    &[9, 11, 12, 13, 14, 15, 17],
    &[16, 17],
    &[14, 15, 16, 17, 18],
    &[17, 18],
];

const STABLE_CSOAN_TABLE: [&[usize]; 18] = [
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
    &[7],
    &[8],
    &[9, 11, 12, 13, 14, 15],
    &[10],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[9, 11, 12, 13, 14, 15],
    &[16],
    &[17, 18],
    &[17, 18],
];

/// (link node set, conductance) per edge for the stable state.
const STABLE_LNS_TABLE: [(&[usize], f64); 18] = [
    (&[1, 2, 3, 4], 0.2),
    (&[1, 2, 3, 4], 0.2),
    (&[1, 2, 3, 4], 0.2),
    (&[1, 2, 3, 4], 0.2),
    (&[1, 2, 3, 4], 0.2),
    (&[1, 2, 3, 4], 0.2),
    (&[4, 5], 0.778),
    (&[4, 6], 0.778),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[5, 6], 0.667),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[4, 5, 6, 7, 8, 9, 10], 0.334),
    (&[8, 9], 0.667),
    (&[8, 9, 10], 0.334),
    (&[8, 9, 10], 0.334),
];

fn example_graph() -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for (u, v, w) in EDGES {
        g.add_edge(u, v, w).unwrap();
    }
    g
}

fn refs(ids: &[usize]) -> BTreeSet<EdgeRef> {
    ids.iter().map(|&i| EdgeRef::new(i)).collect()
}

fn nodes(ids: &[usize]) -> BTreeSet<NodeId> {
    ids.iter().copied().collect()
}

#[test]
fn first_order_neighbors_match_for_all_edges() {
    let g = example_graph();
    let state = compute_foan(&g);
    for (row, expected) in FOAN_TABLE.iter().enumerate() {
        let e = EdgeRef::new(row + 1);
        assert_eq!(
            state.neighbors(e).unwrap(),
            &refs(expected),
            "first-order neighbors of edge {e}"
        );
    }
}

#[test]
fn first_refinement_step_matches_for_all_edges() {
    let g = example_graph();
    let next = csoan_step(&g, &compute_foan(&g), &CommunityConfig::default());
    for (row, expected) in FIRST_CSOAN_TABLE.iter().enumerate() {
        let e = EdgeRef::new(row + 1);
        assert_eq!(
            next.neighbors(e).unwrap(),
            &refs(expected),
            "first constrained set of edge {e}"
        );
    }
}

#[test]
fn jaccard_spot_values_over_first_order_vectors() {
    let g = example_graph();
    let state = compute_foan(&g);
    let vec_of = |i: usize| edge_vector(&g, state.neighbors(EdgeRef::new(i)).unwrap());
    let cases = [
        (1, 2, 0.79),
        (1, 3, 0.51),
        (11, 12, 0.91),
        (16, 17, 0.64),
    ];
    for (a, b, expected) in cases {
        let j = weighted_jaccard(&vec_of(a), &vec_of(b));
        assert!(
            (j - expected).abs() <= 0.005,
            "jaccard({a},{b}) = {j}, expected about {expected}"
        );
    }
}

#[test]
fn stable_state_matches_for_all_edges() {
    let g = example_graph();
    let stability = iterate_to_stability(&g, &CommunityConfig::default());
    assert!(stability.converged);
    assert_eq!(stability.iterations, 4);
    for (row, expected) in STABLE_CSOAN_TABLE.iter().enumerate() {
        let e = EdgeRef::new(row + 1);
        assert_eq!(
            stability.state.neighbors(e).unwrap(),
            &refs(expected),
            "stable set of edge {e}"
        );
    }
}

#[test]
fn stable_link_node_sets_and_conductances() {
    let g = example_graph();
    let stability = iterate_to_stability(&g, &CommunityConfig::default());
    for (row, (expected_nodes, expected_phi)) in STABLE_LNS_TABLE.iter().enumerate() {
        let e = EdgeRef::new(row + 1);
        let lns = link_node_set(&g, stability.state.neighbors(e).unwrap());
        assert_eq!(lns, nodes(expected_nodes), "link node set of edge {e}");
        let phi = g.conductance(&lns).unwrap();
        assert!(
            (phi - expected_phi).abs() <= 0.002,
            "conductance of edge {e} set = {phi}, expected about {expected_phi}"
        );
    }
}

#[test]
fn detection_produces_the_merged_communities() {
    let g = example_graph();
    let detection = detect_communities(&g, &CommunityConfig::default()).unwrap();
    assert!(detection.converged);
    let got: Vec<(Vec<usize>, f64)> = detection
        .communities
        .iter()
        .map(|c| (c.members.iter().copied().collect(), c.conductance))
        .collect();
    let expected: Vec<(Vec<usize>, f64)> = vec![
        (vec![1, 2, 3, 4], 0.2),
        (vec![4, 5, 6, 7, 8, 9, 10], 1.0 / 3.0),
        (vec![8, 9, 10], 1.0 / 3.0),
        (vec![4, 5, 6], 0.5),
        (vec![8, 9], 2.0 / 3.0),
        (vec![4, 6], 7.0 / 9.0),
    ];
    assert_eq!(got.len(), expected.len());
    for ((members, phi), (want_members, want_phi)) in got.iter().zip(&expected) {
        assert_eq!(members, want_members);
        assert!((phi - want_phi).abs() < 1e-9);
    }
}

#[test]
fn selection_from_the_five_community_fixture() {
    let g = example_graph();
    let fixture: Vec<Community> = [
        &[1usize, 2, 3, 4][..],
        &[1, 2, 3, 4, 5, 6],
        &[4, 5, 6, 7, 8, 9, 10],
        &[1, 2, 3, 4, 8, 9, 10],
        &[8, 9, 10],
    ]
    .iter()
    .map(|ids| Community {
        members: nodes(ids),
        conductance: 0.0,
    })
    .collect();

    let mixed = nodes(&[1, 2, 3, 4, 8, 9, 10]);
    let expected_degrees = [
        (1, 20.0),
        (2, 18.0),
        (3, 18.0),
        (4, 12.0),
        (8, 6.0),
        (9, 8.0),
        (10, 10.0),
    ];
    for (node, expected) in expected_degrees {
        assert_eq!(g.weighted_degree_in(node, &mixed).unwrap(), expected);
    }

    let selection = select_influential(&g, &fixture, &RankBudget::SentenceCount(4));
    let set: BTreeSet<NodeId> = selection.nodes().into_iter().collect();
    assert_eq!(set, nodes(&[1, 3, 7, 10]));
}

#[test]
fn merge_declines_the_low_high_pair() {
    let g = example_graph();
    let outcome =
        community::merge_lns(&g, &[nodes(&[1, 2, 3, 4]), nodes(&[4, 5])]).unwrap();
    let members: Vec<BTreeSet<NodeId>> = outcome
        .communities
        .iter()
        .map(|c| c.members.clone())
        .collect();
    assert_eq!(members, vec![nodes(&[1, 2, 3, 4]), nodes(&[4, 5])]);
}
