//! Taxonomical encodings: hierarchy construction, code tables and the concept dictionary.

mod build;
mod code;
mod dictionary;
pub mod tables;

pub use build::{build_taxonomy, BuildError, BuildStats, ParentRef, Taxonomy, ENTITY, POLICY_ID};
pub use code::{
    ascii_label_count, is_label_char, label, CodeError, Polarity, Prefix, TaxCode, ASCII_LABELS,
    FALLBACK_LABEL,
};
pub use dictionary::{
    assemble_dictionary, build_role_operator_tables, canonical_member, ConceptDictionary, DictError,
    DictMeta, Entry, EntryCode, EntryKind,
};

use crate::wordnet::WordNetStore;

/// Builds the hierarchy and assembles the dictionary in one step.
pub fn build_dictionary(store: &WordNetStore) -> Result<(Taxonomy, ConceptDictionary), crate::Error> {
    let tax = build_taxonomy(store)?;
    let dict = assemble_dictionary(store, &tax)?;
    Ok((tax, dict))
}
