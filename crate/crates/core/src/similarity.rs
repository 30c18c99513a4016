//! Sentence-pair similarity and construction of the weighted sentence graph.
//!
//! A pair's similarity is a convex mix of a statistical measure (TF-IDF
//! cosine) and a semantic proxy (Jaccard over the stemmed token sets). An
//! edge exists when the mix clears the `delta_e` threshold; raising the
//! threshold can only remove edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::float;
use crate::graph::WeightedGraph;
use crate::preprocess::SentenceRecord;

/// Sparse term-weight mapping for one sentence.
pub type TermWeights = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityConfig {
    /// Edge threshold in [0, 1]; pairs below it stay disconnected.
    pub delta_e: f64,
    /// Mix between statistical (1.0) and semantic (0.0) similarity.
    pub lambda: f64,
}

impl Default for SimilarityConfig {
    fn default() -> Self {
        SimilarityConfig {
            delta_e: 0.1,
            lambda: 0.5,
        }
    }
}

impl SimilarityConfig {
    pub fn validate(&self) -> Result<(), &'static str> {
        if !(0.0..=1.0).contains(&self.delta_e) {
            return Err("delta_e must lie in [0, 1]");
        }
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err("lambda must lie in [0, 1]");
        }
        Ok(())
    }
}

/// TF-IDF weights per sentence, treating each sentence as one document:
/// weight(term) = tf(term) * ln(1 + n / df(term)).
pub fn tfidf_vectors(records: &[SentenceRecord]) -> Vec<TermWeights> {
    let n = records.len() as f64;
    let mut document_frequency: BTreeMap<&str, usize> = BTreeMap::new();
    for record in records {
        let distinct: BTreeSet<&str> = record.tokens.iter().map(String::as_str).collect();
        for term in distinct {
            *document_frequency.entry(term).or_insert(0) += 1;
        }
    }
    records
        .iter()
        .map(|record| {
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for token in &record.tokens {
                *counts.entry(token).or_insert(0) += 1;
            }
            counts
                .into_iter()
                .map(|(term, tf)| {
                    let df = document_frequency[term] as f64;
                    let weight = tf as f64 * float::ln(1.0 + n / df);
                    (String::from(term), weight)
                })
                .collect()
        })
        .collect()
}

/// Cosine similarity of two sparse vectors; 0 when either has zero norm.
pub fn statistical_similarity(a: &TermWeights, b: &TermWeights) -> f64 {
    let dot: f64 = a
        .iter()
        .filter_map(|(term, wa)| b.get(term).map(|wb| wa * wb))
        .sum();
    let norm_a: f64 = a.values().map(|w| w * w).sum();
    let norm_b: f64 = b.values().map(|w| w * w).sum();
    if norm_a == 0.0 || norm_b == 0.0 {
        return 0.0;
    }
    dot / (float::sqrt(norm_a) * float::sqrt(norm_b))
}

/// Set Jaccard over token sets; 0 when both sets are empty.
pub fn semantic_similarity<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let intersection = a.intersection(b).count() as f64;
    let union = (a.len() + b.len()) as f64 - intersection;
    intersection / union
}

/// Builds the sentence graph: node per sentence index, an edge for every
/// pair whose mixed similarity is positive and at least `delta_e`, with
/// that similarity as the weight.
pub fn build_graph(records: &[SentenceRecord], config: &SimilarityConfig) -> WeightedGraph {
    assert!(
        config.validate().is_ok(),
        "invalid similarity configuration"
    );
    let mut graph = WeightedGraph::new();
    for record in records {
        graph.add_node(record.index);
    }
    let tfidf = tfidf_vectors(records);
    let token_sets: Vec<BTreeSet<&str>> = records
        .iter()
        .map(|r| r.tokens.iter().map(String::as_str).collect())
        .collect();
    for i in 0..records.len() {
        for j in (i + 1)..records.len() {
            let statistical = statistical_similarity(&tfidf[i], &tfidf[j]);
            let semantic = semantic_similarity(&token_sets[i], &token_sets[j]);
            let mixed = config.lambda * statistical + (1.0 - config.lambda) * semantic;
            if mixed > 0.0 && mixed >= config.delta_e {
                graph
                    .add_edge(records[i].index, records[j].index, mixed)
                    .expect("pairs are distinct and weights positive");
            }
        }
    }
    graph
}
