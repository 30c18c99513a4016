//! Corpus harness: summarize every manifest document and score it against
//! its reference summaries.
//!
//! The manifest is a JSON array of `{"document": path, "references":
//! [path, ...]}` entries; paths are resolved relative to the manifest's
//! directory. A document's recall is averaged over its references.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use linksum_core::rouge::rouge_n_text;

use crate::config::PipelineConfig;
use crate::pipeline::run_summarize;
use crate::report::{CorpusDocumentOut, CorpusMeanOut, CorpusReport, SCHEMA_VERSION};

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct ManifestEntry {
    document: String,
    references: Vec<String>,
}

fn parse_manifest(raw: &str) -> Result<Vec<ManifestEntry>> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(raw).context("manifest must be a JSON array")?;
    values
        .into_iter()
        .enumerate()
        .map(|(index, value)| {
            let entry: ManifestEntry = serde_json::from_value(value)
                .with_context(|| format!("manifest entry {index} is malformed"))?;
            if entry.references.is_empty() {
                bail!("manifest entry {index} ({}) lists no references", entry.document);
            }
            Ok(entry)
        })
        .collect()
}

fn resolve(base: &Path, relative: &str) -> PathBuf {
    let path = Path::new(relative);
    if path.is_absolute() {
        path.to_path_buf()
    } else {
        base.join(path)
    }
}

/// Runs the harness over a manifest file.
pub fn run_corpus(manifest_path: &Path, config: &PipelineConfig) -> Result<CorpusReport> {
    let raw = fs::read_to_string(manifest_path)
        .with_context(|| format!("cannot read manifest {}", manifest_path.display()))?;
    let entries = parse_manifest(&raw)?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let tokenization = config.rouge_tokenization();

    let mut documents = Vec::new();
    for (index, entry) in entries.iter().enumerate() {
        let doc_path = resolve(base, &entry.document);
        let text = fs::read_to_string(&doc_path).with_context(|| {
            format!(
                "manifest entry {index}: cannot read document {}",
                doc_path.display()
            )
        })?;
        let outcome = run_summarize(&text, config)?;
        let candidate = &outcome.summary.text;

        let mut recall1 = 0.0;
        let mut recall2 = 0.0;
        for reference in &entry.references {
            let ref_path = resolve(base, reference);
            let reference_text = fs::read_to_string(&ref_path).with_context(|| {
                format!(
                    "manifest entry {index}: cannot read reference {}",
                    ref_path.display()
                )
            })?;
            recall1 += rouge_n_text(candidate, &reference_text, 1, &tokenization).recall;
            recall2 += rouge_n_text(candidate, &reference_text, 2, &tokenization).recall;
        }
        let count = entry.references.len() as f64;
        documents.push(CorpusDocumentOut {
            document: entry.document.clone(),
            rouge1_recall: recall1 / count,
            rouge2_recall: recall2 / count,
        });
    }

    let mean = if documents.is_empty() {
        None
    } else {
        let n = documents.len() as f64;
        Some(CorpusMeanOut {
            rouge1_recall: documents.iter().map(|d| d.rouge1_recall).sum::<f64>() / n,
            rouge2_recall: documents.iter().map(|d| d.rouge2_recall).sum::<f64>() / n,
        })
    };
    Ok(CorpusReport {
        schema_version: SCHEMA_VERSION,
        documents,
        mean,
    })
}

/// Plain-text table for terminal output.
pub fn format_table(report: &CorpusReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<40} {:>10} {:>10}\n",
        "document", "rouge-1 R", "rouge-2 R"
    ));
    for doc in &report.documents {
        out.push_str(&format!(
            "{:<40} {:>10.4} {:>10.4}\n",
            doc.document, doc.rouge1_recall, doc.rouge2_recall
        ));
    }
    match &report.mean {
        Some(mean) => out.push_str(&format!(
            "{:<40} {:>10.4} {:>10.4}\n",
            "MEAN", mean.rouge1_recall, mean.rouge2_recall
        )),
        None => out.push_str("(no documents)\n"),
    }
    out
}
