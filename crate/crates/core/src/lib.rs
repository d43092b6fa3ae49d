//! Negation detection for German clinical text.
//!
//! Text passes through [`preprocess`] (sentences, tokens, stopwords,
//! compounds, dictionary concepts), then [`negex`] assigns every concept an
//! assertion from trigger rules, and [`deppat`] optionally revises those
//! assertions with dependency-graph patterns. [`evalharness`] scores the
//! result against gold data. [`pipeline::Pipeline`] wires the steps.

pub mod deppat;
pub mod error;
pub mod evalharness;
pub mod negex;
pub mod pipeline;
pub mod preprocess;
pub mod resources;
pub mod textmodel;

pub use error::{Error, Result};
pub use pipeline::{ParseStore, Pipeline};
