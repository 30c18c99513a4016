//! Effective pipeline configuration with the precedence
//! command-line flags > JSON config file > built-in defaults.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use linksum_core::community::CommunityConfig;
use linksum_core::rank::RankBudget;
use linksum_core::rouge::RougeTokenization;
use linksum_core::similarity::SimilarityConfig;

/// Fully resolved settings for one pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub delta_e: f64,
    pub lambda: f64,
    pub delta_csoan: f64,
    pub alpha_decay: f64,
    /// `None` resolves to the built graph's edge count.
    pub max_iterations: Option<usize>,
    pub budget: RankBudget,
    pub rouge_stem: bool,
    pub rouge_stopwords: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            delta_e: 0.1,
            lambda: 0.5,
            delta_csoan: 0.5,
            alpha_decay: 0.8,
            max_iterations: None,
            budget: RankBudget::SentenceCount(3),
            rouge_stem: false,
            rouge_stopwords: false,
        }
    }
}

impl PipelineConfig {
    pub fn similarity(&self) -> SimilarityConfig {
        SimilarityConfig {
            delta_e: self.delta_e,
            lambda: self.lambda,
        }
    }

    pub fn community(&self) -> CommunityConfig {
        CommunityConfig {
            delta_csoan: self.delta_csoan,
            alpha_decay: self.alpha_decay,
            max_iterations: self.max_iterations,
        }
    }

    pub fn rouge_tokenization(&self) -> RougeTokenization {
        RougeTokenization {
            stem: self.rouge_stem,
            remove_stopwords: self.rouge_stopwords,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.similarity().validate().map_err(anyhow::Error::msg)?;
        self.community().validate().map_err(anyhow::Error::msg)?;
        match self.budget {
            RankBudget::SentenceCount(0) => bail!("sentence count must be at least 1"),
            RankBudget::WordBudget(0) => bail!("word budget must be at least 1"),
            _ => Ok(()),
        }
    }
}

/// Optional per-field overrides, either from the JSON config file or from
/// command-line flags.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ConfigOverrides {
    pub delta_e: Option<f64>,
    pub lambda: Option<f64>,
    pub delta_csoan: Option<f64>,
    pub alpha_decay: Option<f64>,
    pub max_iterations: Option<usize>,
    pub sentences: Option<usize>,
    pub word_budget: Option<usize>,
    pub stem: Option<bool>,
    pub stopwords: Option<bool>,
}

impl ConfigOverrides {
    pub fn from_file(path: &Path) -> Result<Self> {
        let raw = fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        let overrides: ConfigOverrides = serde_json::from_str(&raw)
            .with_context(|| format!("malformed config file {}", path.display()))?;
        if overrides.sentences.is_some() && overrides.word_budget.is_some() {
            bail!(
                "config file {} sets both `sentences` and `wordBudget`",
                path.display()
            );
        }
        Ok(overrides)
    }

    fn apply(&self, config: &mut PipelineConfig) {
        if let Some(v) = self.delta_e {
            config.delta_e = v;
        }
        if let Some(v) = self.lambda {
            config.lambda = v;
        }
        if let Some(v) = self.delta_csoan {
            config.delta_csoan = v;
        }
        if let Some(v) = self.alpha_decay {
            config.alpha_decay = v;
        }
        if let Some(v) = self.max_iterations {
            config.max_iterations = Some(v);
        }
        match (self.sentences, self.word_budget) {
            (Some(k), _) => config.budget = RankBudget::SentenceCount(k),
            (None, Some(w)) => config.budget = RankBudget::WordBudget(w),
            (None, None) => {}
        }
        if let Some(v) = self.stem {
            config.rouge_stem = v;
        }
        if let Some(v) = self.stopwords {
            config.rouge_stopwords = v;
        }
    }
}

/// Layers file overrides, then flag overrides, over the defaults.
pub fn resolve(file: Option<ConfigOverrides>, flags: &ConfigOverrides) -> Result<PipelineConfig> {
    let mut config = PipelineConfig::default();
    if let Some(file) = file {
        file.apply(&mut config);
    }
    flags.apply(&mut config);
    config.validate()?;
    Ok(config)
}
