//! Shared fixtures for the benchmarks.

use std::path::PathBuf;

use drstax_core::taxonomy::{build_dictionary, ConceptDictionary};
use drstax_core::wordnet::{load_wordnet, WordNetStore};

pub fn wordnet_dir() -> PathBuf {
    match std::env::var_os("WORDNET_DIR") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/wordnet-3.0"),
    }
}

pub fn store() -> WordNetStore {
    load_wordnet(&wordnet_dir()).expect("WordNet 3.0 files (set WORDNET_DIR)")
}

pub fn dictionary(store: &WordNetStore) -> ConceptDictionary {
    build_dictionary(store).expect("taxonomy build").1
}
