//! Document preprocessing: sentence segmentation, tokenization, stopword
//! removal, and stemming.
//!
//! The stopword and abbreviation lists are pinned resource files embedded
//! at compile time (`resources/stopwords.txt`, `resources/abbreviations.txt`,
//! one entry per line) so that identical input bytes always produce
//! identical records.

mod porter;

pub use porter::porter_stem;

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

static STOPWORDS_SRC: &str = include_str!("../../resources/stopwords.txt");
static ABBREVIATIONS_SRC: &str = include_str!("../../resources/abbreviations.txt");

/// One preprocessed sentence. `index` is the 0-based document position,
/// `raw` the original sentence text, and `tokens` the lowercased,
/// stopword-filtered, stemmed token list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceRecord {
    pub index: usize,
    pub raw: String,
    pub tokens: Vec<String>,
}

fn parse_word_list(src: &'static str) -> BTreeSet<&'static str> {
    src.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .collect()
}

/// The embedded stopword list.
pub fn stopword_list() -> BTreeSet<&'static str> {
    parse_word_list(STOPWORDS_SRC)
}

/// The embedded abbreviation list used by the sentence segmenter.
pub fn abbreviation_list() -> BTreeSet<&'static str> {
    parse_word_list(ABBREVIATIONS_SRC)
}

/// Splits a document on `.`, `?`, `!` followed by whitespace or
/// end-of-input. A period does not split when the word before it is a
/// known abbreviation or a single letter, which keeps "Dr. Smith" and
/// "U.S." inside one sentence. Returns trimmed, non-empty sentences.
pub fn segment_sentences(text: &str) -> Vec<String> {
    let abbreviations = abbreviation_list();
    let mut sentences = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut start = 0;

    for position in 0..chars.len() {
        let (byte, ch) = chars[position];
        if !matches!(ch, '.' | '?' | '!') {
            continue;
        }
        let at_end = position + 1 == chars.len();
        let next_is_space = !at_end && chars[position + 1].1.is_whitespace();
        if !(at_end || next_is_space) {
            continue;
        }
        if ch == '.' && guards_period(&text[start..byte], &abbreviations) {
            continue;
        }
        let end = byte + ch.len_utf8();
        push_trimmed(&mut sentences, &text[start..end]);
        start = end;
    }
    push_trimmed(&mut sentences, &text[start..]);
    sentences
}

/// True when the word immediately before a period suppresses the split.
fn guards_period(prefix: &str, abbreviations: &BTreeSet<&str>) -> bool {
    let word = prefix
        .rsplit(char::is_whitespace)
        .next()
        .unwrap_or("")
        .trim_matches(|c: char| !c.is_alphanumeric());
    if word.is_empty() {
        return false;
    }
    let lowered = word.to_lowercase();
    if abbreviations.contains(lowered.as_str()) {
        return true;
    }
    let mut letters = lowered.chars();
    matches!((letters.next(), letters.next()), (Some(c), None) if c.is_alphabetic())
}

fn push_trimmed(sentences: &mut Vec<String>, raw: &str) {
    let trimmed = raw.trim();
    if !trimmed.is_empty() {
        sentences.push(trimmed.to_string());
    }
}

/// Lowercased maximal runs of alphanumeric characters; everything else is
/// discarded.
pub fn tokenize(sentence: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in sentence.chars() {
        if ch.is_alphanumeric() {
            current.extend(ch.to_lowercase());
        } else if !current.is_empty() {
            tokens.push(core::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// Drops every token found in the embedded stopword list, preserving order.
pub fn remove_stopwords(tokens: Vec<String>) -> Vec<String> {
    let stopwords = stopword_list();
    tokens
        .into_iter()
        .filter(|token| !stopwords.contains(token.as_str()))
        .collect()
}

/// Runs the full pipeline: segmentation, tokenization, stopword removal,
/// then stemming. Sentences whose token list ends up empty are retained
/// with their index so later stages see a stable sentence numbering; they
/// simply become isolated graph nodes.
pub fn preprocess_document(text: &str) -> Vec<SentenceRecord> {
    let stopwords = stopword_list();
    segment_sentences(text)
        .into_iter()
        .enumerate()
        .map(|(index, raw)| {
            let tokens = tokenize(&raw)
                .into_iter()
                .filter(|token| !stopwords.contains(token.as_str()))
                .map(|token| porter_stem(&token))
                .collect();
            SentenceRecord { index, raw, tokens }
        })
        .collect()
}
