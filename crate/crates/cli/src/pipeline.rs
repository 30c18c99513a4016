//! The full summarize pipeline over an in-memory document, shared by the
//! `summarize` and `corpus` commands.

use anyhow::Result;

use linksum_core::community::{detect_communities, Detection};
use linksum_core::preprocess::{preprocess_document, SentenceRecord};
use linksum_core::rank::{assemble_summary, select_influential, RankedSelection, Summary};
use linksum_core::similarity::build_graph;

use crate::config::PipelineConfig;
use crate::report::{communities_out, picks_out, ConfigOut, SentenceOut, SummarizeReport, SCHEMA_VERSION};

/// Everything one summarize run produced.
#[derive(Debug)]
pub struct PipelineOutcome {
    pub records: Vec<SentenceRecord>,
    pub detection: Option<Detection>,
    pub selection: Option<RankedSelection>,
    pub summary: Summary,
    pub warnings: Vec<String>,
}

/// Runs preprocess, graph construction, community detection, selection,
/// and assembly. Documents with fewer than two sentences short-circuit:
/// the document is emitted unchanged with a warning.
pub fn run_summarize(text: &str, config: &PipelineConfig) -> Result<PipelineOutcome> {
    config.validate()?;
    let records = preprocess_document(text);
    let mut warnings = Vec::new();

    if records.len() < 2 {
        warnings.push(format!(
            "document has {} sentence(s); emitting it unchanged",
            records.len()
        ));
        let indices = (0..records.len()).collect();
        return Ok(PipelineOutcome {
            summary: Summary {
                indices,
                text: text.trim().to_string(),
                budget_limited: false,
            },
            records,
            detection: None,
            selection: None,
            warnings,
        });
    }

    let graph = build_graph(&records, &config.similarity());
    let detection = detect_communities(&graph, &config.community())?;
    if !detection.converged {
        warnings.push(format!(
            "refinement stopped at the iteration cap ({}) before reaching a fixpoint",
            detection.iterations
        ));
    }
    if !detection.excluded.is_empty() {
        warnings.push(format!(
            "{} candidate set(s) spanned every connected node and were folded into one community",
            detection.excluded.len()
        ));
    }
    let selection = select_influential(&graph, &detection.communities, &config.budget);
    if selection.short {
        warnings.push(format!(
            "only {} sentence(s) were selectable",
            selection.picks.len()
        ));
    }
    let summary = assemble_summary(&records, &selection, &config.budget);
    if summary.budget_limited && summary.indices.is_empty() {
        warnings.push("word budget is smaller than the first selected sentence".to_string());
    }
    Ok(PipelineOutcome {
        records,
        detection: Some(detection),
        selection: Some(selection),
        summary,
        warnings,
    })
}

pub fn summarize_report(text: &str, config: &PipelineConfig) -> Result<SummarizeReport> {
    let outcome = run_summarize(text, config)?;
    Ok(build_report(&outcome, config))
}

pub fn build_report(outcome: &PipelineOutcome, config: &PipelineConfig) -> SummarizeReport {
    let sentences = outcome
        .summary
        .indices
        .iter()
        .map(|&index| SentenceOut {
            index,
            text: outcome.records[index].raw.clone(),
        })
        .collect();
    let (iterations, converged) = outcome
        .detection
        .as_ref()
        .map(|d| (d.iterations, d.converged))
        .unwrap_or((0, true));
    SummarizeReport {
        schema_version: SCHEMA_VERSION,
        summary: outcome.summary.text.clone(),
        sentence_count: outcome.records.len(),
        sentences,
        picks: outcome
            .selection
            .as_ref()
            .map(picks_out)
            .unwrap_or_default(),
        communities: outcome
            .detection
            .as_ref()
            .map(communities_out)
            .unwrap_or_default(),
        iterations,
        converged,
        warnings: outcome.warnings.clone(),
        config: ConfigOut::from_config(config),
    }
}
