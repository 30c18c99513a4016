//! Diagnostic trace over the embedded example network: every refinement
//! iteration's per-edge neighbor sets keyed by map index, the stable
//! link node sets with conductances, the merged communities, per-community
//! weighted degrees, and the resulting selection.

use std::collections::BTreeMap;

use anyhow::Result;
use serde::Serialize;

use linksum_core::community::{
    detect_communities, iterate_with_history, link_node_set, CommunityConfig, NeighborState,
};
use linksum_core::graph::WeightedGraph;
use linksum_core::rank::{select_influential, RankBudget};

use crate::edgelist::example_graph;
use crate::report::{communities_out, picks_out, CommunityOut, PickOut, SCHEMA_VERSION};

/// Picks made in the trace; the worked example extracts five sentences.
const TRACE_PICKS: usize = 5;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceReport {
    pub schema_version: u32,
    pub edges: Vec<EdgeOut>,
    pub foan: BTreeMap<usize, Vec<usize>>,
    pub first_csoan: BTreeMap<usize, Vec<usize>>,
    pub iteration_trace: Vec<IterationOut>,
    pub stable: Vec<StableEdgeOut>,
    pub iterations: usize,
    pub converged: bool,
    pub communities: Vec<CommunityOut>,
    pub weighted_degrees: Vec<CommunityDegreesOut>,
    pub selection: Vec<PickOut>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeOut {
    pub index: usize,
    pub source: usize,
    pub target: usize,
    pub weight: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IterationOut {
    pub iteration: usize,
    pub neighbors: BTreeMap<usize, Vec<usize>>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StableEdgeOut {
    pub edge: usize,
    pub endpoints: (usize, usize),
    pub csoan: Vec<usize>,
    pub link_node_set: Vec<usize>,
    pub conductance: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CommunityDegreesOut {
    pub community: usize,
    pub degrees: BTreeMap<usize, f64>,
}

fn neighbor_map(state: &NeighborState) -> BTreeMap<usize, Vec<usize>> {
    state
        .per_edge()
        .iter()
        .map(|(e, set)| (e.index(), set.iter().map(|f| f.index()).collect()))
        .collect()
}

pub fn trace_example() -> Result<TraceReport> {
    let graph = example_graph();
    build_trace(&graph)
}

fn build_trace(graph: &WeightedGraph) -> Result<TraceReport> {
    let config = CommunityConfig::default();
    let (stability, history) = iterate_with_history(graph, &config);
    let detection = detect_communities(graph, &config)?;
    let selection = select_influential(
        graph,
        &detection.communities,
        &RankBudget::SentenceCount(TRACE_PICKS),
    );

    let edges = graph
        .edge_refs()
        .map(|e| {
            let (source, target) = graph.endpoints(e);
            EdgeOut {
                index: e.index(),
                source,
                target,
                weight: graph.weight(e),
            }
        })
        .collect();

    let stable = graph
        .edge_refs()
        .map(|e| {
            let set = stability.state.neighbors(e).expect("edge tracked");
            let lns = link_node_set(graph, set);
            StableEdgeOut {
                edge: e.index(),
                endpoints: graph.endpoints(e),
                csoan: set.iter().map(|f| f.index()).collect(),
                link_node_set: lns.iter().copied().collect(),
                conductance: graph.conductance(&lns).ok(),
            }
        })
        .collect();

    let weighted_degrees = detection
        .communities
        .iter()
        .enumerate()
        .map(|(community, c)| CommunityDegreesOut {
            community,
            degrees: c
                .members
                .iter()
                .map(|&v| {
                    (
                        v,
                        graph
                            .weighted_degree_in(v, &c.members)
                            .expect("member of community"),
                    )
                })
                .collect(),
        })
        .collect();

    Ok(TraceReport {
        schema_version: SCHEMA_VERSION,
        edges,
        foan: neighbor_map(&history[0]),
        first_csoan: neighbor_map(&history[1]),
        iteration_trace: history
            .iter()
            .map(|state| IterationOut {
                iteration: state.iteration(),
                neighbors: neighbor_map(state),
            })
            .collect(),
        stable,
        iterations: stability.iterations,
        converged: stability.converged,
        communities: communities_out(&detection),
        weighted_degrees,
        selection: picks_out(&selection),
    })
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Plain-text rendering, sectioned for eyeballing against the reference
/// tables.
pub fn format_trace(report: &TraceReport) -> String {
    let mut out = String::new();
    let edge_label = |index: usize| {
        let e = &report.edges[index - 1];
        format!("({}, {})", e.source, e.target)
    };

    out.push_str("== edges (map index: endpoints, weight) ==\n");
    for e in &report.edges {
        out.push_str(&format!(
            "{:>2}: ({}, {}) w={}\n",
            e.index, e.source, e.target, e.weight
        ));
    }

    out.push_str("\n== first-order approximate neighbors ==\n");
    for (index, set) in &report.foan {
        out.push_str(&format!("{}: {}\n", edge_label(*index), join(set)));
    }

    out.push_str("\n== constrained neighbors, iteration 1 ==\n");
    for (index, set) in &report.first_csoan {
        out.push_str(&format!("{}: {}\n", edge_label(*index), join(set)));
    }

    out.push_str(&format!(
        "\n== stable state after {} iteration(s), converged: {} ==\n",
        report.iterations, report.converged
    ));
    for row in &report.stable {
        let phi = row
            .conductance
            .map(|v| format!("{v:.3}"))
            .unwrap_or_else(|| "undefined".to_string());
        out.push_str(&format!(
            "{}: csoan {{{}}} nodes {{{}}} conductance {}\n",
            edge_label(row.edge),
            join(&row.csoan),
            join(&row.link_node_set),
            phi
        ));
    }

    out.push_str("\n== communities after merging ==\n");
    for (i, c) in report.communities.iter().enumerate() {
        out.push_str(&format!(
            "{i}: {{{}}} conductance {:.3}\n",
            join(&c.members),
            c.conductance
        ));
    }

    out.push_str("\n== weighted degrees per community ==\n");
    for entry in &report.weighted_degrees {
        let degrees = entry
            .degrees
            .iter()
            .map(|(node, degree)| format!("{node}: {degree}"))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("community {}: {}\n", entry.community, degrees));
    }

    out.push_str("\n== selection ==\n");
    for pick in &report.selection {
        out.push_str(&format!(
            "pick {}: node {} from community {} (weighted degree {})\n",
            pick.order, pick.sentence, pick.community, pick.weighted_degree
        ));
    }
    out
}
