use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use linksum_cli::config::{resolve, ConfigOverrides, PipelineConfig};
use linksum_cli::corpus::{format_table, run_corpus};
use linksum_cli::pipeline::{build_report, run_summarize};
use linksum_cli::report::{to_json_line, EvalReport, ScoreOut, SCHEMA_VERSION};
use linksum_cli::trace::{format_trace, trace_example};
use linksum_core::rouge::{rouge_n_text, RougeTokenization};

#[derive(Parser)]
#[command(
    name = "linksum",
    version,
    about = "Extractive summarizer: sentence graphs, overlapping communities, weighted-degree ranking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a UTF-8 text document.
    Summarize {
        /// Input text file.
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Emit the full JSON report instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Score a candidate summary against a reference with ROUGE-N.
    Eval {
        candidate: PathBuf,
        reference: PathBuf,
        /// n-gram orders to report.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        n: Vec<usize>,
        #[command(flatten)]
        tokenization: TokenizationArgs,
        /// JSON config file (its `stem` / `stopwords` keys apply here).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Summarize and score every document in a manifest.
    Corpus {
        /// JSON array of {"document": path, "references": [path, ...]}.
        manifest: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[command(flatten)]
        tokenization: TokenizationArgs,
        #[arg(long)]
        json: bool,
    },
    /// Dump the worked trace of the embedded example network.
    TraceExample {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PipelineArgs {
    /// JSON config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Edge threshold in [0, 1].
    #[arg(long)]
    delta_e: Option<f64>,
    /// Statistical/semantic similarity mix in [0, 1].
    #[arg(long)]
    lambda: Option<f64>,
    /// Base neighbor-filter threshold in (0, 1].
    #[arg(long)]
    delta_csoan: Option<f64>,
    /// Per-iteration threshold decay in (0, 1].
    #[arg(long)]
    alpha_decay: Option<f64>,
    /// Refinement iteration cap (default: edge count).
    #[arg(long = "max-iter")]
    max_iterations: Option<usize>,
    /// Number of sentences to select.
    #[arg(short = 'k', long = "sentences", conflicts_with = "word_budget")]
    sentences: Option<usize>,
    /// Maximum summary length in words.
    #[arg(long)]
    word_budget: Option<usize>,
}

#[derive(Args, Default)]
struct TokenizationArgs {
    /// Stem tokens before scoring.
    #[arg(long, overrides_with = "no_stem")]
    stem: bool,
    #[arg(long = "no-stem", overrides_with = "stem", hide = true)]
    no_stem: bool,
    /// Remove stopwords before scoring.
    #[arg(long = "stopwords", overrides_with = "no_stopwords")]
    stopwords: bool,
    #[arg(long = "no-stopwords", overrides_with = "stopwords", hide = true)]
    no_stopwords: bool,
}

impl TokenizationArgs {
    fn stem_override(&self) -> Option<bool> {
        match (self.stem, self.no_stem) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }

    fn stopwords_override(&self) -> Option<bool> {
        match (self.stopwords, self.no_stopwords) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}

fn resolve_pipeline(args: &PipelineArgs, tokenization: Option<&TokenizationArgs>) -> Result<PipelineConfig> {
    let file = args
        .config
        .as_deref()
        .map(ConfigOverrides::from_file)
        .transpose()?;
    let flags = ConfigOverrides {
        delta_e: args.delta_e,
        lambda: args.lambda,
        delta_csoan: args.delta_csoan,
        alpha_decay: args.alpha_decay,
        max_iterations: args.max_iterations,
        sentences: args.sentences,
        word_budget: args.word_budget,
        stem: tokenization.and_then(TokenizationArgs::stem_override),
        stopwords: tokenization.and_then(TokenizationArgs::stopwords_override),
    };
    resolve(file, &flags)
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Summarize {
            input,
            pipeline,
            json,
        } => {
            let config = resolve_pipeline(&pipeline, None)?;
            let text = fs::read_to_string(&input)
                .with_context(|| format!("cannot read input file {}", input.display()))?;
            let outcome = run_summarize(&text, &config)?;
            for warning in &outcome.warnings {
                eprintln!("warning: {warning}");
            }
            if json {
                print!("{}", to_json_line(&build_report(&outcome, &config)));
            } else {
                println!("{}", outcome.summary.text);
            }
        }
        Command::Eval {
            candidate,
            reference,
            n,
            tokenization,
            config,
            json,
        } => {
            let file = config
                .as_deref()
                .map(ConfigOverrides::from_file)
                .transpose()?
                .unwrap_or_default();
            let options = RougeTokenization {
                stem: tokenization.stem_override().or(file.stem).unwrap_or(false),
                remove_stopwords: tokenization
                    .stopwords_override()
                    .or(file.stopwords)
                    .unwrap_or(false),
            };
            let candidate_text = fs::read_to_string(&candidate)
                .with_context(|| format!("cannot read candidate file {}", candidate.display()))?;
            let reference_text = fs::read_to_string(&reference)
                .with_context(|| format!("cannot read reference file {}", reference.display()))?;
            let scores: Vec<ScoreOut> = n
                .iter()
                .map(|&order| {
                    anyhow::ensure!(order >= 1, "n-gram order must be at least 1");
                    Ok(rouge_n_text(&candidate_text, &reference_text, order, &options).into())
                })
                .collect::<Result<_>>()?;
            if json {
                let report = EvalReport {
                    schema_version: SCHEMA_VERSION,
                    stem: options.stem,
                    stopwords: options.remove_stopwords,
                    scores,
                };
                print!("{}", to_json_line(&report));
            } else {
                for s in &scores {
                    println!(
                        "rouge-{}: recall {:.6} precision {:.6} f1 {:.6}",
                        s.n, s.recall, s.precision, s.f1
                    );
                }
            }
        }
        Command::Corpus {
            manifest,
            pipeline,
            tokenization,
            json,
        } => {
            let config = resolve_pipeline(&pipeline, Some(&tokenization))?;
            let report = run_corpus(&manifest, &config)?;
            if json {
                print!("{}", to_json_line(&report));
            } else {
                print!("{}", format_table(&report));
            }
        }
        Command::TraceExample { json } => {
            let report = trace_example()?;
            if json {
                print!("{}", to_json_line(&report));
            } else {
                print!("{}", format_trace(&report));
            }
        }
    }
    Ok(())
}
