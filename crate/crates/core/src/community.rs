//! Overlapping community detection by iterative link-neighborhood
//! refinement.
//!
//! Each edge starts from its first-order approximate neighbors (every edge
//! sharing an endpoint, itself included). One refinement step expands an
//! edge's set to second order (the union of its neighbors' sets), then
//! keeps only the members whose weight vectors are similar to the edge's
//! own vector under weighted Jaccard, against a per-iteration threshold
//! `delta_csoan * alpha_decay^(t-1)`. Steps repeat until the whole
//! per-edge mapping stops changing. Stable sets project to node sets,
//! which merge greedily whenever a union strictly lowers conductance.
//!
//! Within one step every per-edge computation is independent of the
//! others, so steps may be parallelized as long as the iteration barrier
//! is kept; this implementation runs them sequentially, which is already
//! deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::graph::{EdgeRef, GraphError, NodeId, WeightedGraph};

/// Thresholding schedule and iteration cap for the refinement loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommunityConfig {
    /// Base similarity threshold, used unscaled at the first iteration.
    pub delta_csoan: f64,
    /// Per-iteration decay applied to the threshold.
    pub alpha_decay: f64,
    /// Hard cap on refinement steps; `None` means the edge count.
    pub max_iterations: Option<usize>,
}

impl Default for CommunityConfig {
    fn default() -> Self {
        CommunityConfig {
            delta_csoan: 0.5,
            alpha_decay: 0.8,
            max_iterations: None,
        }
    }
}

impl CommunityConfig {
    pub fn validate(&self) -> Result<(), &'static str> {
        if !(self.delta_csoan > 0.0 && self.delta_csoan <= 1.0) {
            return Err("delta_csoan must lie in (0, 1]");
        }
        if !(self.alpha_decay > 0.0 && self.alpha_decay <= 1.0) {
            return Err("alpha_decay must lie in (0, 1]");
        }
        if self.max_iterations == Some(0) {
            return Err("max_iterations must be at least 1");
        }
        Ok(())
    }

    /// Threshold in force at 1-based iteration `t`:
    /// `delta_csoan * alpha_decay^(t-1)`.
    pub fn threshold_at(&self, iteration: usize) -> f64 {
        let mut threshold = self.delta_csoan;
        for _ in 1..iteration {
            threshold *= self.alpha_decay;
        }
        threshold
    }
}

/// Per-edge neighbor sets at one iteration. Every edge always contains
/// itself in its own set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborState {
    neighbors: BTreeMap<EdgeRef, BTreeSet<EdgeRef>>,
    iteration: usize,
}

impl NeighborState {
    /// 1-based iteration index; the first-order state is iteration 1.
    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn neighbors(&self, e: EdgeRef) -> Option<&BTreeSet<EdgeRef>> {
        self.neighbors.get(&e)
    }

    pub fn per_edge(&self) -> &BTreeMap<EdgeRef, BTreeSet<EdgeRef>> {
        &self.neighbors
    }
}

/// Sparse weight vector over edge map indices, sorted by index.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeWeightVector {
    components: Vec<(EdgeRef, f64)>,
}

impl EdgeWeightVector {
    pub fn components(&self) -> &[(EdgeRef, f64)] {
        &self.components
    }

    pub fn get(&self, e: EdgeRef) -> Option<f64> {
        self.components
            .binary_search_by_key(&e, |(edge, _)| *edge)
            .ok()
            .map(|i| self.components[i].1)
    }
}

/// A detected community: a node set together with its conductance.
/// Sets with no incident edges (isolated singletons) carry 0.0, the
/// convention for a set no edge leaves.
#[derive(Debug, Clone, PartialEq)]
pub struct Community {
    pub members: BTreeSet<NodeId>,
    pub conductance: f64,
}

/// First-order approximate neighbors of every edge: all edges incident to
/// either endpoint, the edge itself included.
pub fn compute_foan(graph: &WeightedGraph) -> NeighborState {
    let neighbors = graph
        .edge_refs()
        .map(|e| {
            let (u, v) = graph.endpoints(e);
            let mut set: BTreeSet<EdgeRef> = BTreeSet::new();
            set.extend(graph.incident_edges(u).expect("endpoint exists"));
            set.extend(graph.incident_edges(v).expect("endpoint exists"));
            (e, set)
        })
        .collect();
    NeighborState {
        neighbors,
        iteration: 1,
    }
}

/// Second-order approximate neighbors: union of the neighbor sets of
/// every edge in `e`'s own neighbor set.
pub fn compute_soan(state: &NeighborState, e: EdgeRef) -> BTreeSet<EdgeRef> {
    let mut union = BTreeSet::new();
    if let Some(first_order) = state.neighbors(e) {
        for f in first_order {
            if let Some(second) = state.neighbors(*f) {
                union.extend(second);
            }
        }
    }
    union
}

/// Weight vector spanned by a neighbor set: one component per member edge,
/// carrying that edge's graph weight.
pub fn edge_vector(graph: &WeightedGraph, neighbor_set: &BTreeSet<EdgeRef>) -> EdgeWeightVector {
    EdgeWeightVector {
        components: neighbor_set
            .iter()
            .map(|&e| (e, graph.weight(e)))
            .collect(),
    }
}

/// Weighted Jaccard over the union of supports: sum of componentwise
/// minima divided by sum of maxima; 0 when both vectors are empty.
pub fn weighted_jaccard(x: &EdgeWeightVector, y: &EdgeWeightVector) -> f64 {
    let a = &x.components;
    let b = &y.components;
    let (mut i, mut j) = (0, 0);
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => {
                denominator += a[i].1;
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                denominator += b[j].1;
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                numerator += a[i].1.min(b[j].1);
                denominator += a[i].1.max(b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    denominator += a[i..].iter().map(|(_, w)| w).sum::<f64>();
    denominator += b[j..].iter().map(|(_, w)| w).sum::<f64>();
    if denominator == 0.0 {
        0.0
    } else {
        numerator / denominator
    }
}

/// One refinement step: for every edge, keep the second-order neighbors
/// whose vectors clear the iteration's threshold, plus the edge itself.
pub fn csoan_step(
    graph: &WeightedGraph,
    state: &NeighborState,
    config: &CommunityConfig,
) -> NeighborState {
    let threshold = config.threshold_at(state.iteration);
    let vectors: BTreeMap<EdgeRef, EdgeWeightVector> = state
        .per_edge()
        .iter()
        .map(|(&e, set)| (e, edge_vector(graph, set)))
        .collect();
    let neighbors = state
        .per_edge()
        .keys()
        .map(|&e| {
            let own = &vectors[&e];
            let mut kept: BTreeSet<EdgeRef> = compute_soan(state, e)
                .into_iter()
                .filter(|f| weighted_jaccard(own, &vectors[f]) >= threshold)
                .collect();
            kept.insert(e);
            (e, kept)
        })
        .collect();
    NeighborState {
        neighbors,
        iteration: state.iteration + 1,
    }
}

/// Result of running the refinement loop.
#[derive(Debug, Clone, PartialEq)]
pub struct Stability {
    pub state: NeighborState,
    /// Number of refinement steps executed.
    pub iterations: usize,
    /// False when the loop stopped at the iteration cap instead of a
    /// fixpoint.
    pub converged: bool,
}

/// Runs refinement steps until the whole per-edge mapping repeats
/// (a global fixpoint) or the iteration cap is reached.
pub fn iterate_to_stability(graph: &WeightedGraph, config: &CommunityConfig) -> Stability {
    iterate_with_history(graph, config).0
}

/// Like [`iterate_to_stability`], also returning every intermediate state
/// starting with the first-order one. Feeds the diagnostic trace output.
pub fn iterate_with_history(
    graph: &WeightedGraph,
    config: &CommunityConfig,
) -> (Stability, Vec<NeighborState>) {
    assert!(config.validate().is_ok(), "invalid community configuration");
    let mut current = compute_foan(graph);
    let mut history = Vec::new();
    history.push(current.clone());
    if graph.edge_count() == 0 {
        return (
            Stability {
                state: current,
                iterations: 0,
                converged: true,
            },
            history,
        );
    }
    let cap = config.max_iterations.unwrap_or(graph.edge_count()).max(1);
    for step in 1..=cap {
        let next = csoan_step(graph, &current, config);
        let stable = next.per_edge() == current.per_edge();
        history.push(next.clone());
        current = next;
        if stable {
            return (
                Stability {
                    state: current,
                    iterations: step,
                    converged: true,
                },
                history,
            );
        }
    }
    (
        Stability {
            state: current,
            iterations: cap,
            converged: false,
        },
        history,
    )
}

/// Node endpoints of every edge in a stable neighbor set.
pub fn link_node_set(graph: &WeightedGraph, edges: &BTreeSet<EdgeRef>) -> BTreeSet<NodeId> {
    let mut nodes = BTreeSet::new();
    for &e in edges {
        let (u, v) = graph.endpoints(e);
        nodes.insert(u);
        nodes.insert(v);
    }
    nodes
}

/// Outcome of conductance-driven merging. `excluded` lists input sets
/// whose conductance is undefined (they cover every node, or every edge
/// endpoint); such sets cannot participate in conductance comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct MergeOutcome {
    pub communities: Vec<Community>,
    pub excluded: Vec<BTreeSet<NodeId>>,
}

/// Deduplicates the input sets and repeatedly merges the pair whose union
/// strictly lowers conductance below both constituents, scanning pairs in
/// a fixed order (conductance ascending, then lexicographic members) so
/// the result does not depend on input order. Stops at a fixpoint.
pub fn merge_lns(
    graph: &WeightedGraph,
    sets: &[BTreeSet<NodeId>],
) -> Result<MergeOutcome, GraphError> {
    let mut excluded = Vec::new();
    let mut working: Vec<(BTreeSet<NodeId>, f64)> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<NodeId>> = BTreeSet::new();
    for set in sets {
        if set.is_empty() {
            return Err(GraphError::UndefinedConductance(
                crate::graph::ConductanceDefect::EmptySet,
            ));
        }
        if !seen.insert(set.clone()) {
            continue;
        }
        match graph.conductance(set) {
            Ok(phi) => working.push((set.clone(), phi)),
            Err(GraphError::UndefinedConductance(_)) => excluded.push(set.clone()),
            Err(other) => return Err(other),
        }
    }

    loop {
        working.sort_by(|(sa, pa), (sb, pb)| pa.total_cmp(pb).then_with(|| sa.cmp(sb)));
        let mut merged = None;
        'scan: for i in 0..working.len() {
            for j in (i + 1)..working.len() {
                let union: BTreeSet<NodeId> = working[i].0.union(&working[j].0).copied().collect();
                // A union whose conductance is undefined (covers every
                // node, or swallows all edge volume) cannot be compared,
                // hence cannot merge.
                let Ok(phi) = graph.conductance(&union) else {
                    continue;
                };
                if phi < working[i].1.min(working[j].1) {
                    merged = Some((i, j, union, phi));
                    break 'scan;
                }
            }
        }
        match merged {
            Some((i, j, union, phi)) => {
                working.remove(j);
                working.remove(i);
                if !working.iter().any(|(s, _)| s == &union) {
                    working.push((union, phi));
                }
            }
            None => break,
        }
    }

    working.sort_by(|(sa, pa), (sb, pb)| pa.total_cmp(pb).then_with(|| sa.cmp(sb)));
    Ok(MergeOutcome {
        communities: working
            .into_iter()
            .map(|(members, conductance)| Community {
                members,
                conductance,
            })
            .collect(),
        excluded,
    })
}

/// Full detection result.
#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub communities: Vec<Community>,
    /// Refinement steps executed before stability (or the cap).
    pub iterations: usize,
    pub converged: bool,
    /// Node sets dropped because they covered the whole graph.
    pub excluded: Vec<BTreeSet<NodeId>>,
}

/// Runs the whole pipeline: first-order neighbors, refinement to
/// stability, node projection, conductance merging. Nodes without any
/// incident edge are appended as singleton communities, so an edgeless
/// graph yields one singleton per node.
pub fn detect_communities(
    graph: &WeightedGraph,
    config: &CommunityConfig,
) -> Result<Detection, GraphError> {
    let stability = iterate_to_stability(graph, config);
    let link_sets: Vec<BTreeSet<NodeId>> = stability
        .state
        .per_edge()
        .values()
        .map(|set| link_node_set(graph, set))
        .collect();
    let merged = merge_lns(graph, &link_sets)?;
    let mut communities = merged.communities;
    // When every stable link set spans all edge endpoints there is no
    // scorable set left, yet those sets are the only candidates. Re-admit
    // them as communities; no edge leaves such a set, so it carries 0.0
    // like the isolated singletons below.
    if communities.is_empty() {
        let mut readmitted = BTreeSet::new();
        for set in &merged.excluded {
            if readmitted.insert(set.clone()) {
                communities.push(Community {
                    members: set.clone(),
                    conductance: 0.0,
                });
            }
        }
    }
    for node in graph.nodes() {
        if graph.incident_edges(node)?.is_empty() {
            communities.push(Community {
                members: [node].into_iter().collect(),
                conductance: 0.0,
            });
        }
    }
    Ok(Detection {
        communities,
        iterations: stability.iterations,
        converged: stability.converged,
        excluded: merged.excluded,
    })
}
