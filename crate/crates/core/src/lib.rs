//! Extractive summarization over weighted sentence-similarity graphs.
//!
//! The pipeline turns a document into a graph whose nodes are sentences and
//! whose edges carry a mixed statistical/semantic similarity, detects
//! overlapping sentence communities by iterative link-neighborhood
//! refinement with conductance-driven merging, and selects summary
//! sentences by weighted degree inside the largest remaining community.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature and enable `libm` to build it for freestanding targets.
//! File formats, the CLI, and all I/O live in the companion `linksum-cli`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("linksum-core requires either the `std` feature or the `libm` feature");

extern crate alloc;

mod float;

pub mod community;
pub mod graph;
pub mod preprocess;
pub mod rank;
pub mod rouge;
pub mod similarity;

pub use community::{
    detect_communities, Community, CommunityConfig, Detection, NeighborState, Stability,
};
pub use graph::{ConductanceMode, EdgeRef, GraphError, NodeId, WeightedGraph};
pub use preprocess::{preprocess_document, SentenceRecord};
pub use rank::{assemble_summary, select_influential, RankBudget, RankedSelection, Summary};
pub use rouge::{rouge_n, rouge_n_text, RougeScore, RougeTokenization};
pub use similarity::{build_graph, SimilarityConfig};
