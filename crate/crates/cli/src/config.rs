//! Resource flags and pipeline assembly shared by every subcommand.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use negdetect_core::deppat::{parse_pattern_file, ChainLabel, GraphPattern, MatchConfig};
use negdetect_core::negex::{NegexConfig, TriggerSet, Window};
use negdetect_core::preprocess::{CompoundLexicon, ConceptDictionary, StopwordList};
use negdetect_core::{resources, ParseStore, Pipeline};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ResourceArgs {
    /// Directory searched for triggers.tsv, concepts.tsv, stopwords.txt and
    /// compound_lexicon.txt before falling back to the built-in resources
    #[arg(long, env = "NEGDETECT_RESOURCES", global = true)]
    pub resources: Option<PathBuf>,

    /// Trigger file, or a built-in set name (ots, mts)
    #[arg(long, env = "NEGDETECT_TRIGGERS", global = true)]
    pub triggers: Option<String>,

    /// Concept dictionary (phrase TAB category)
    #[arg(long, env = "NEGDETECT_CONCEPTS", global = true)]
    pub concepts: Option<PathBuf>,

    #[arg(long, env = "NEGDETECT_STOPWORDS", global = true)]
    pub stopwords: Option<PathBuf>,

    #[arg(long, env = "NEGDETECT_COMPOUNDS", global = true)]
    pub compounds: Option<PathBuf>,

    /// Dependency pattern file (pattern TAB NEG|POS [TAB description])
    #[arg(long, env = "NEGDETECT_PATTERNS", global = true)]
    pub patterns: Option<PathBuf>,

    /// Directory of .conllu parses for the input sentences
    #[arg(long, env = "NEGDETECT_CONLLU_DIR", global = true)]
    pub conllu_dir: Option<PathBuf>,

    /// Scope window in tokens, or "inf"
    #[arg(long, env = "NEGDETECT_WINDOW", global = true)]
    pub window: Option<Window>,

    /// How `>>` chains check their relation label (first_edge, any_edge)
    #[arg(long, env = "NEGDETECT_CHAIN_LABEL", global = true)]
    pub chain_label: Option<ChainLabel>,
}

/// A fully loaded configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub pipeline: Pipeline,
    /// Patterns from `--patterns`, empty otherwise.
    pub patterns: Vec<GraphPattern>,
}

fn read(path: &Path, what: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {what} {}", path.display()))
}

impl ResourceArgs {
    fn locate(&self, explicit: &Option<PathBuf>, file: &str) -> Option<PathBuf> {
        explicit.clone().or_else(|| {
            let p = self.resources.as_ref()?.join(file);
            p.is_file().then_some(p)
        })
    }

    /// Resolves a trigger spec: a built-in name or a file path.
    pub fn trigger_set(&self, spec: Option<&str>) -> Result<TriggerSet> {
        let spec = match spec {
            Some(s) => s.to_string(),
            None => match self.locate(&None, "triggers.tsv") {
                Some(p) => p.to_string_lossy().into_owned(),
                None => return Ok(resources::ots()),
            },
        };
        if let Some(set) = resources::trigger_set(&spec) {
            return Ok(set);
        }
        let path = Path::new(&spec);
        let name = path.file_stem().map_or(spec.clone(), |s| s.to_string_lossy().into_owned());
        let content = read(path, "trigger file")?;
        TriggerSet::parse(name, &content).with_context(|| format!("loading triggers from {spec}"))
    }

    /// Loads every resource; nothing is read from the input before this
    /// succeeds.
    pub fn load(&self) -> Result<RunConfig> {
        if self.patterns.is_some() && self.conllu_dir.is_none() {
            bail!("dependency patterns require parses (--conllu-dir)");
        }
        let mut pipeline = Pipeline::builtin();
        pipeline.triggers = self.trigger_set(self.triggers.as_deref())?;
        pipeline.negex = NegexConfig::with_window(self.window.unwrap_or(Window::Tokens(5)));
        pipeline.match_config = MatchConfig {
            chain_label: self.chain_label.unwrap_or_default(),
        };
        if let Some(p) = self.locate(&self.concepts, "concepts.tsv") {
            pipeline.dictionary = ConceptDictionary::parse(&read(&p, "concept dictionary")?, &pipeline.segmenter)
                .with_context(|| format!("loading concepts from {}", p.display()))?;
        }
        if let Some(p) = self.locate(&self.stopwords, "stopwords.txt") {
            pipeline.stopwords = StopwordList::parse(&read(&p, "stopword list")?)
                .with_context(|| format!("loading stopwords from {}", p.display()))?;
        }
        if let Some(p) = self.locate(&self.compounds, "compound_lexicon.txt") {
            pipeline.compounds = CompoundLexicon::parse(&read(&p, "compound lexicon")?)
                .with_context(|| format!("loading compound lexicon from {}", p.display()))?;
        }
        let mut patterns = Vec::new();
        if let Some(p) = &self.patterns {
            patterns = parse_pattern_file(&read(p, "pattern file")?)
                .with_context(|| format!("loading patterns from {}", p.display()))?;
        }
        if let Some(dir) = &self.conllu_dir {
            pipeline.parses = load_parses(dir)?;
        }
        pipeline.patterns = patterns.clone();
        Ok(RunConfig { pipeline, patterns })
    }
}

/// Reads every `*.conllu` file of `dir`, in name order.
pub fn load_parses(dir: &Path) -> Result<ParseStore> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading parse directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "conllu"))
        .collect();
    files.sort();
    let mut store = ParseStore::new();
    for f in files {
        store
            .add_conllu(&read(&f, "parse file")?)
            .with_context(|| format!("loading {}", f.display()))?;
    }
    Ok(store)
}
