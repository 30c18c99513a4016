//! Command-line layer over `linksum-core`: configuration resolution, file
//! formats, the summarize/eval/corpus pipelines, and diagnostic tracing.

pub mod config;
pub mod corpus;
pub mod edgelist;
pub mod pipeline;
pub mod report;
pub mod trace;

pub use config::{resolve, ConfigOverrides, PipelineConfig};
pub use pipeline::{run_summarize, summarize_report};
