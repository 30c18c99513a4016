//! Sentence selection from overlapping communities.
//!
//! Selection loops: take the community with the most remaining members
//! (ties: larger total weighted degree inside it, then earlier creation),
//! pick its member with the largest weighted degree (ties: lower node
//! index), then remove that node from every community so it can never be
//! picked twice. The loop is sequential and fully deterministic.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::community::Community;
use crate::graph::{NodeId, WeightedGraph};
use crate::preprocess::SentenceRecord;

/// Summary size target: either a fixed number of sentences or a word
/// budget applied while assembling the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankBudget {
    SentenceCount(usize),
    WordBudget(usize),
}

/// One selection, with the community it came from and the weighted degree
/// it had there at pick time.
#[derive(Debug, Clone, PartialEq)]
pub struct Pick {
    pub node: NodeId,
    /// Index of the source community in the input list.
    pub community: usize,
    pub weighted_degree: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RankedSelection {
    /// Picks in selection order.
    pub picks: Vec<Pick>,
    /// True when the communities ran out before the requested count.
    pub short: bool,
}

impl RankedSelection {
    pub fn nodes(&self) -> Vec<NodeId> {
        self.picks.iter().map(|p| p.node).collect()
    }
}

fn weighted_degree(graph: &WeightedGraph, v: NodeId, members: &BTreeSet<NodeId>) -> f64 {
    members
        .iter()
        .filter(|&&u| u != v)
        .filter_map(|&u| graph.weight_between(u, v))
        .sum()
}

/// Repeatedly extracts the most influential node as described in the
/// module docs. With a word budget, every reachable node is selected and
/// the budget is applied later by [`assemble_summary`].
pub fn select_influential(
    graph: &WeightedGraph,
    communities: &[Community],
    budget: &RankBudget,
) -> RankedSelection {
    let mut remaining: Vec<BTreeSet<NodeId>> =
        communities.iter().map(|c| c.members.clone()).collect();
    let target = match budget {
        RankBudget::SentenceCount(k) => *k,
        RankBudget::WordBudget(_) => {
            let mut distinct = BTreeSet::new();
            for members in &remaining {
                distinct.extend(members.iter().copied());
            }
            distinct.len()
        }
    };

    let mut picks = Vec::new();
    while picks.len() < target {
        let mut best: Option<(usize, usize, f64)> = None;
        for (index, members) in remaining.iter().enumerate() {
            if members.is_empty() {
                continue;
            }
            let size = members.len();
            let total: f64 = members
                .iter()
                .map(|&v| weighted_degree(graph, v, members))
                .sum();
            let better = match best {
                None => true,
                Some((_, best_size, best_total)) => {
                    size > best_size || (size == best_size && total > best_total)
                }
            };
            if better {
                best = Some((index, size, total));
            }
        }
        let Some((community, _, _)) = best else {
            break;
        };

        let members = &remaining[community];
        let mut chosen: Option<(NodeId, f64)> = None;
        for &v in members {
            let degree = weighted_degree(graph, v, members);
            let better = match chosen {
                None => true,
                Some((node, best_degree)) => {
                    degree > best_degree || (degree == best_degree && v < node)
                }
            };
            if better {
                chosen = Some((v, degree));
            }
        }
        let (node, degree) = chosen.expect("community is nonempty");
        picks.push(Pick {
            node,
            community,
            weighted_degree: degree,
        });
        for members in &mut remaining {
            members.remove(&node);
        }
    }

    RankedSelection {
        short: picks.len() < target,
        picks,
    }
}

/// Assembled summary text. `indices` are the emitted sentence indices in
/// document order; `budget_limited` flags that a word budget cut the
/// selection off.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub indices: Vec<usize>,
    pub text: String,
    pub budget_limited: bool,
}

/// Emits the selected sentences in original document order. With a word
/// budget, picks are admitted greedily in pick order until the next one
/// would overflow the budget, then ordered by position.
pub fn assemble_summary(
    records: &[SentenceRecord],
    selection: &RankedSelection,
    budget: &RankBudget,
) -> Summary {
    let mut included = Vec::new();
    let mut budget_limited = false;
    match budget {
        RankBudget::SentenceCount(_) => {
            included.extend(selection.picks.iter().map(|p| p.node));
        }
        RankBudget::WordBudget(limit) => {
            let mut used = 0;
            for pick in &selection.picks {
                let words = records[pick.node].raw.split_whitespace().count();
                if used + words > *limit {
                    budget_limited = true;
                    break;
                }
                used += words;
                included.push(pick.node);
            }
        }
    }
    included.sort_unstable();
    let text = included
        .iter()
        .map(|&i| records[i].raw.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    Summary {
        indices: included,
        text,
        budget_limited,
    }
}
