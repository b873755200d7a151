//! Taxonomical WordNet concept encodings, DRS sequence notation in three
//! predicate formats, and taxonomy-aware Smatch evaluation.

pub mod drs;
pub mod evaluation;
pub mod interpreter;
pub mod matcher;
pub mod similarity;
pub mod taxonomy;
pub mod wordnet;

use thiserror::Error;

/// Top-level error for operations that span modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    WordNet(#[from] wordnet::WordNetError),
    #[error(transparent)]
    Build(#[from] taxonomy::BuildError),
    #[error(transparent)]
    Dictionary(#[from] taxonomy::DictError),
}
