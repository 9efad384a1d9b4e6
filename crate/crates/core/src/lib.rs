//! Phonetic input for Hindi: roman keystrokes to Devanagari.
//!
//! The pieces, bottom up:
//!
//! * [`table`]: the phoneme table with canonical, alternate and escape codes
//! * [`compose`]: phoneme sequences to Devanagari grapheme clusters
//! * [`segment`]: token lattices and greedy (maximal-munch) tokenization
//! * [`key`], [`corpus`], [`lexicon`]: phonetic keys and the frequency lexicon
//! * [`engine`]: ranked suggestions with direct-mapping fallback
//! * [`eval`]: edit-distance scoring of input schemes
//!
//! ```
//! use hindi_ime::{CharacterTable, EngineConfig, Lexicon, transliterate_sentence};
//!
//! let table = CharacterTable::load_default();
//! let lexicon = Lexicon::build([("राजधानी", 5)], &table).lexicon;
//! let out = transliterate_sentence(&lexicon, &table, &EngineConfig::default(), "rajdhani");
//! assert_eq!(out, "राजधानी");
//! ```

pub mod compose;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod eval;
pub mod key;
pub mod lexicon;
pub mod segment;
pub mod table;
#[cfg(feature = "testkit")]
pub mod testkit;
mod trie;

pub use compose::{compose, forms_conjunct};
pub use corpus::ingest_corpus;
pub use engine::{
    direct_map, suggest, transliterate_sentence, Engine, EngineConfig, Suggestion,
    SuggestionSource,
};
pub use error::{Error, Result};
pub use eval::{
    avg_edit_dist, compare_schemes, edit_distance, format_report_table, weighted_average,
    write_report_tsv, CharFrequencies,
    EvalReport, SchemeEncoding, SubjectResponses,
};
pub use key::{normalize_key, schwa_dropped_key};
pub use lexicon::{Lexicon, LexiconEntry};
pub use segment::{build_lattice, enumerate_paths, greedy_tokenize, TokenLattice, Tokenization};
pub use table::{load_default_table, CharacterTable, PhonemeCategory, PhonemeEntry};
