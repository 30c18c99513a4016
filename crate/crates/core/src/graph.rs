//! Weighted undirected graph with a stable 1-based edge index, plus the
//! degree and conductance queries the community and ranking stages build on.
//!
//! Edges are identified by their insertion order ("map index", starting at
//! 1), which keeps every derived structure — neighbor sets, edge vectors,
//! diagnostic dumps — reproducible across runs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// Node identifier. Sentence graphs use the sentence's document position.
pub type NodeId = usize;

/// Stable 1-based edge identifier, assigned in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(usize);

impl EdgeRef {
    /// Wraps a 1-based map index.
    ///
    /// Panics if `map_index` is zero; valid indices start at 1.
    pub fn new(map_index: usize) -> Self {
        assert!(map_index >= 1, "edge map indices are 1-based");
        EdgeRef(map_index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy)]
struct Edge {
    u: NodeId,
    v: NodeId,
    weight: f64,
}

/// How conductance treats edge weights.
///
/// `Binary` counts every edge as 1 regardless of weight; `Weighted` uses the
/// stored weights for both the cut and the volumes. Binary is the default
/// used throughout community detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConductanceMode {
    #[default]
    Binary,
    Weighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    UnknownNode(NodeId),
    SelfLoop(NodeId),
    NonPositiveWeight,
    DuplicateEdge(NodeId, NodeId),
    /// Node passed to a subgraph-degree query is not in the subgraph.
    NodeOutsideCommunity(NodeId),
    /// Conductance has no value for this node set.
    UndefinedConductance(ConductanceDefect),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConductanceDefect {
    EmptySet,
    WholeNodeSet,
    ZeroVolume,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownNode(v) => write!(f, "node {v} is not in the graph"),
            GraphError::SelfLoop(v) => write!(f, "self-loop on node {v} rejected"),
            GraphError::NonPositiveWeight => write!(f, "edge weights must be strictly positive"),
            GraphError::DuplicateEdge(u, v) => write!(f, "edge ({u}, {v}) already present"),
            GraphError::NodeOutsideCommunity(v) => {
                write!(f, "node {v} is not a member of the community")
            }
            GraphError::UndefinedConductance(defect) => {
                let why = match defect {
                    ConductanceDefect::EmptySet => "the set is empty",
                    ConductanceDefect::WholeNodeSet => "the set covers every node",
                    ConductanceDefect::ZeroVolume => "the set has no incident edges",
                };
                write!(f, "conductance undefined: {why}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected graph with strictly positive edge weights and no self-loops.
///
/// Immutable once built: all queries take `&self`, so shared references can
/// be used freely across threads.
#[derive(Debug, Clone, Default)]
pub struct WeightedGraph {
    nodes: BTreeSet<NodeId>,
    edges: Vec<Edge>,
    by_pair: BTreeMap<(NodeId, NodeId), EdgeRef>,
    incident: BTreeMap<NodeId, BTreeSet<EdgeRef>>,
}

fn normalize(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a node. Harmless if it already exists.
    pub fn add_node(&mut self, v: NodeId) {
        self.nodes.insert(v);
        self.incident.entry(v).or_default();
    }

    /// Inserts the undirected edge (u, v); endpoints are registered as
    /// nodes. The returned `EdgeRef` is the edge's permanent map index.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, weight: f64) -> Result<EdgeRef, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !(weight > 0.0) {
            return Err(GraphError::NonPositiveWeight);
        }
        let key = normalize(u, v);
        if self.by_pair.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.add_node(u);
        self.add_node(v);
        let edge = EdgeRef(self.edges.len() + 1);
        self.edges.push(Edge { u, v, weight });
        self.by_pair.insert(key, edge);
        self.incident.get_mut(&u).expect("node registered").insert(edge);
        self.incident.get_mut(&v).expect("node registered").insert(edge);
        Ok(edge)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        self.nodes.contains(&v)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().copied()
    }

    pub fn node_set(&self) -> &BTreeSet<NodeId> {
        &self.nodes
    }

    /// All edge map indices in insertion order.
    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        (1..=self.edges.len()).map(EdgeRef)
    }

    fn edge(&self, e: EdgeRef) -> &Edge {
        &self.edges[e.0.checked_sub(1).expect("edge indices are 1-based")]
    }

    /// Endpoints of an edge, in insertion order.
    ///
    /// Panics if `e` does not belong to this graph.
    pub fn endpoints(&self, e: EdgeRef) -> (NodeId, NodeId) {
        let edge = self.edge(e);
        (edge.u, edge.v)
    }

    /// Weight of an edge. Panics if `e` does not belong to this graph.
    pub fn weight(&self, e: EdgeRef) -> f64 {
        self.edge(e).weight
    }

    pub fn edge_between(&self, u: NodeId, v: NodeId) -> Option<EdgeRef> {
        self.by_pair.get(&normalize(u, v)).copied()
    }

    pub fn weight_between(&self, u: NodeId, v: NodeId) -> Option<f64> {
        self.edge_between(u, v).map(|e| self.weight(e))
    }

    /// Every edge having `v` as an endpoint.
    pub fn incident_edges(&self, v: NodeId) -> Result<&BTreeSet<EdgeRef>, GraphError> {
        self.incident.get(&v).ok_or(GraphError::UnknownNode(v))
    }

    /// Number of incident edges.
    pub fn degree(&self, v: NodeId) -> Result<usize, GraphError> {
        Ok(self.incident_edges(v)?.len())
    }

    /// Sum of weights of edges from `v` to other members of `community`.
    ///
    /// `v` must be a member of `community`, and the community must be a
    /// subset of the graph's nodes.
    pub fn weighted_degree_in(
        &self,
        v: NodeId,
        community: &BTreeSet<NodeId>,
    ) -> Result<f64, GraphError> {
        if !self.contains_node(v) {
            return Err(GraphError::UnknownNode(v));
        }
        if !community.contains(&v) {
            return Err(GraphError::NodeOutsideCommunity(v));
        }
        if let Some(&out) = community.iter().find(|n| !self.contains_node(**n)) {
            return Err(GraphError::UnknownNode(out));
        }
        let sum = self
            .incident_edges(v)?
            .iter()
            .map(|&e| {
                let (a, b) = self.endpoints(e);
                let other = if a == v { b } else { a };
                if community.contains(&other) {
                    self.weight(e)
                } else {
                    0.0
                }
            })
            .sum();
        Ok(sum)
    }

    pub fn total_edge_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Conductance of a proper nonempty node set under the min-volume
    /// formulation: cut size divided by the smaller side's volume, on the
    /// binary adjacency.
    pub fn conductance(&self, s: &BTreeSet<NodeId>) -> Result<f64, GraphError> {
        self.conductance_with(s, ConductanceMode::Binary)
    }

    /// Conductance with an explicit treatment of edge weights.
    pub fn conductance_with(
        &self,
        s: &BTreeSet<NodeId>,
        mode: ConductanceMode,
    ) -> Result<f64, GraphError> {
        if s.is_empty() {
            return Err(GraphError::UndefinedConductance(ConductanceDefect::EmptySet));
        }
        if let Some(&out) = s.iter().find(|n| !self.contains_node(**n)) {
            return Err(GraphError::UnknownNode(out));
        }
        if s.len() == self.nodes.len() {
            return Err(GraphError::UndefinedConductance(
                ConductanceDefect::WholeNodeSet,
            ));
        }
        let mut cut = 0.0;
        let mut vol_s = 0.0;
        let mut vol_total = 0.0;
        for edge in &self.edges {
            let value = match mode {
                ConductanceMode::Binary => 1.0,
                ConductanceMode::Weighted => edge.weight,
            };
            vol_total += 2.0 * value;
            let in_u = s.contains(&edge.u);
            let in_v = s.contains(&edge.v);
            if in_u && in_v {
                vol_s += 2.0 * value;
            } else if in_u || in_v {
                vol_s += value;
                cut += value;
            }
        }
        let denom = vol_s.min(vol_total - vol_s);
        if denom == 0.0 {
            return Err(GraphError::UndefinedConductance(
                ConductanceDefect::ZeroVolume,
            ));
        }
        Ok(cut / denom)
    }
}
