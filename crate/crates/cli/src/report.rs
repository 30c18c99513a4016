//! Serializable output schemas. Every JSON document carries
//! `schemaVersion` and uses camelCase keys; struct field order is fixed,
//! so identical runs serialize byte-identically.

use serde::Serialize;

use linksum_core::community::{Community, Detection};
use linksum_core::rank::{Pick, RankBudget, RankedSelection};
use linksum_core::rouge::RougeScore;

use crate::config::PipelineConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummarizeReport {
    pub schema_version: u32,
    pub summary: String,
    pub sentence_count: usize,
    pub sentences: Vec<SentenceOut>,
    pub picks: Vec<PickOut>,
    pub communities: Vec<CommunityOut>,
    pub iterations: usize,
    pub converged: bool,
    pub warnings: Vec<String>,
    pub config: ConfigOut,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SentenceOut {
    pub index: usize,
    pub text: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PickOut {
    pub order: usize,
    pub sentence: usize,
    pub community: usize,
    pub weighted_degree: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CommunityOut {
    pub members: Vec<usize>,
    pub conductance: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigOut {
    pub delta_e: f64,
    pub lambda: f64,
    pub delta_csoan: f64,
    pub alpha_decay: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sentences: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word_budget: Option<usize>,
    pub stem: bool,
    pub stopwords: bool,
}

impl ConfigOut {
    pub fn from_config(config: &PipelineConfig) -> Self {
        let (sentences, word_budget) = match config.budget {
            RankBudget::SentenceCount(k) => (Some(k), None),
            RankBudget::WordBudget(w) => (None, Some(w)),
        };
        ConfigOut {
            delta_e: config.delta_e,
            lambda: config.lambda,
            delta_csoan: config.delta_csoan,
            alpha_decay: config.alpha_decay,
            max_iterations: config.max_iterations,
            sentences,
            word_budget,
            stem: config.rouge_stem,
            stopwords: config.rouge_stopwords,
        }
    }
}

pub fn community_out(community: &Community) -> CommunityOut {
    CommunityOut {
        members: community.members.iter().copied().collect(),
        conductance: community.conductance,
    }
}

pub fn communities_out(detection: &Detection) -> Vec<CommunityOut> {
    detection.communities.iter().map(community_out).collect()
}

pub fn pick_out(order: usize, pick: &Pick) -> PickOut {
    PickOut {
        order,
        sentence: pick.node,
        community: pick.community,
        weighted_degree: pick.weighted_degree,
    }
}

pub fn picks_out(selection: &RankedSelection) -> Vec<PickOut> {
    selection
        .picks
        .iter()
        .enumerate()
        .map(|(i, p)| pick_out(i + 1, p))
        .collect()
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvalReport {
    pub schema_version: u32,
    pub stem: bool,
    pub stopwords: bool,
    pub scores: Vec<ScoreOut>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScoreOut {
    pub n: usize,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
}

impl From<RougeScore> for ScoreOut {
    fn from(score: RougeScore) -> Self {
        ScoreOut {
            n: score.n,
            recall: score.recall,
            precision: score.precision,
            f1: score.f1,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub schema_version: u32,
    pub documents: Vec<CorpusDocumentOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean: Option<CorpusMeanOut>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusDocumentOut {
    pub document: String,
    pub rouge1_recall: f64,
    pub rouge2_recall: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusMeanOut {
    pub rouge1_recall: f64,
    pub rouge2_recall: f64,
}

pub fn to_json_line(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}
