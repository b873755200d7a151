#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use drstax_core::taxonomy::{build_dictionary, ConceptDictionary, Taxonomy};
use drstax_core::wordnet::{load_wordnet, WordNetStore};

pub fn wordnet_dir() -> PathBuf {
    match std::env::var_os("WORDNET_DIR") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/wordnet-3.0"),
    }
}

pub struct Built {
    pub store: WordNetStore,
    pub taxonomy: Taxonomy,
    pub dict: ConceptDictionary,
}

pub fn built() -> &'static Built {
    static B: OnceLock<Built> = OnceLock::new();
    B.get_or_init(|| {
        let store = load_wordnet(&wordnet_dir()).expect("WordNet 3.0 files");
        let (taxonomy, dict) = build_dictionary(&store).expect("build");
        Built {
            store,
            taxonomy,
            dict,
        }
    })
}
