//! Plain-text edge list format: one `u v weight` line per edge, 1-based
//! node ids, `#` comments. Map indices follow line order, which is what
//! makes fixture files reproduce a fixed edge indexing.

use anyhow::{bail, Context, Result};

use linksum_core::graph::WeightedGraph;

/// The embedded ten-node example network.
pub const EXAMPLE_GRAPH_EDGES: &str = include_str!("../fixtures/example_graph.edges");

pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    let mut graph = WeightedGraph::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            bail!("edge list line {}: expected `u v weight`, got {line:?}", number + 1);
        }
        let parse = |field: &str, what: &str| -> Result<f64> {
            field
                .parse::<f64>()
                .with_context(|| format!("edge list line {}: bad {what} {field:?}", number + 1))
        };
        let u = parse(fields[0], "node id")? as usize;
        let v = parse(fields[1], "node id")? as usize;
        let weight = parse(fields[2], "weight")?;
        graph
            .add_edge(u, v, weight)
            .with_context(|| format!("edge list line {}", number + 1))?;
    }
    Ok(graph)
}

pub fn format_edge_list(graph: &WeightedGraph) -> String {
    let mut out = String::new();
    for e in graph.edge_refs() {
        let (u, v) = graph.endpoints(e);
        out.push_str(&format!("{u} {v} {}\n", graph.weight(e)));
    }
    out
}

/// The example network, parsed. Edge map indices match the fixture's
/// line order.
pub fn example_graph() -> WeightedGraph {
    parse_edge_list(EXAMPLE_GRAPH_EDGES).expect("embedded fixture parses")
}
