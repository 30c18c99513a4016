//! ROUGE-N: clipped n-gram overlap between a candidate and a reference.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::preprocess::{porter_stem, stopword_list, tokenize};

/// Recall / precision / F1 for one n-gram order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RougeScore {
    pub n: usize,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
}

/// Scoring-time tokenization switches. The default (no stemming, no
/// stopword removal) matches the metric's plain definition; both switches
/// exist to mirror heavier preprocessing pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RougeTokenization {
    pub stem: bool,
    pub remove_stopwords: bool,
}

/// Lowercased alphanumeric-run tokens, optionally stopword-filtered and
/// stemmed.
pub fn rouge_tokens(text: &str, options: &RougeTokenization) -> Vec<String> {
    let mut tokens = tokenize(text);
    if options.remove_stopwords {
        let stopwords = stopword_list();
        tokens.retain(|t| !stopwords.contains(t.as_str()));
    }
    if options.stem {
        tokens = tokens.iter().map(|t| porter_stem(t)).collect();
    }
    tokens
}

/// Multiset of contiguous n-token windows. Empty when the text is shorter
/// than `n`. `n` must be at least 1.
pub fn ngrams(tokens: &[String], n: usize) -> BTreeMap<&[String], usize> {
    assert!(n >= 1, "n-gram order must be at least 1");
    let mut counts = BTreeMap::new();
    if tokens.len() >= n {
        for gram in tokens.windows(n) {
            *counts.entry(gram).or_insert(0) += 1;
        }
    }
    counts
}

/// Clipped-count ROUGE-N: the overlap sums `min(count in candidate,
/// count in reference)` over the reference's distinct grams; recall
/// divides by the reference gram count and precision by the candidate's.
/// Zero denominators score 0.
pub fn rouge_n(candidate: &[String], reference: &[String], n: usize) -> RougeScore {
    let candidate_grams = ngrams(candidate, n);
    let reference_grams = ngrams(reference, n);
    let overlap: usize = reference_grams
        .iter()
        .map(|(gram, count)| (*count).min(candidate_grams.get(gram).copied().unwrap_or(0)))
        .sum();
    let reference_total: usize = reference_grams.values().sum();
    let candidate_total: usize = candidate_grams.values().sum();
    let recall = ratio(overlap, reference_total);
    let precision = ratio(overlap, candidate_total);
    let f1 = if recall + precision > 0.0 {
        2.0 * recall * precision / (recall + precision)
    } else {
        0.0
    };
    RougeScore {
        n,
        recall,
        precision,
        f1,
    }
}

/// ROUGE-N straight from raw texts.
pub fn rouge_n_text(
    candidate: &str,
    reference: &str,
    n: usize,
    options: &RougeTokenization,
) -> RougeScore {
    rouge_n(
        &rouge_tokens(candidate, options),
        &rouge_tokens(reference, options),
        n,
    )
}

fn ratio(numerator: usize, denominator: usize) -> f64 {
    if denominator == 0 {
        0.0
    } else {
        numerator as f64 / denominator as f64
    }
}
