//! Browser bindings for the typing demo in `www/`.
//!
//! The JS side gets three operations: candidate lookup for the token being
//! typed, whole-sentence transliteration, and a listing of the ways a roman
//! token can be split into table codes. Results cross the boundary as JSON.

use hindi_ime::{
    build_lattice, enumerate_paths, CharacterTable, Engine, EngineConfig, Lexicon,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const DEMO_LEXICON: &str = include_str!("../../../data/sample_lexicon.tsv");

/// Most candidates the page asks for.
pub const MAX_LIMIT: usize = 25;

#[derive(Debug, Serialize, PartialEq)]
pub struct Candidate {
    pub word: String,
    pub frequency: u64,
    pub source: String,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Segmentation {
    pub codes: Vec<String>,
    pub phonemes: String,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Segmentations {
    pub total: String,
    pub shown: Vec<Segmentation>,
}

#[wasm_bindgen]
pub struct Ime {
    engine: Engine,
}

impl Ime {
    pub fn from_tsv(tsv: &str) -> Result<Ime, String> {
        let table = CharacterTable::load_default();
        let lexicon = Lexicon::load(tsv.as_bytes(), &table).map_err(|e| e.to_string())?;
        Ok(Ime {
            engine: Engine::new(table, lexicon, EngineConfig::default()),
        })
    }

    pub fn candidates(&self, query: &str, limit: usize) -> Vec<Candidate> {
        self.engine
            .suggest_with_limit(query, limit.clamp(1, MAX_LIMIT))
            .unwrap_or_default()
            .into_iter()
            .map(|s| Candidate {
                word: s.word,
                frequency: s.frequency,
                source: s.source.to_string(),
            })
            .collect()
    }

    pub fn segmentations(&self, query: &str, limit: usize) -> Segmentations {
        let lattice = build_lattice(self.engine.table(), query);
        let shown = enumerate_paths(&lattice, limit)
            .iter()
            .map(|p| Segmentation {
                codes: p.codes(lattice.input()).into_iter().map(str::to_string).collect(),
                phonemes: p.entries().iter().map(|e| e.devanagari()).collect(),
            })
            .collect();
        Segmentations {
            total: lattice.count_paths().to_string(),
            shown,
        }
    }
}

#[wasm_bindgen]
impl Ime {
    /// An engine over the bundled demo lexicon.
    #[wasm_bindgen(constructor)]
    pub fn new() -> Ime {
        Ime::from_tsv(DEMO_LEXICON).expect("bundled lexicon is valid")
    }

    /// An engine over a lexicon TSV supplied by the page.
    #[wasm_bindgen(js_name = withLexicon)]
    pub fn with_lexicon(tsv: &str) -> Result<Ime, JsError> {
        Ime::from_tsv(tsv).map_err(|e| JsError::new(&e))
    }

    pub fn entries(&self) -> usize {
        self.engine.lexicon().len()
    }

    /// JSON array of `{word, frequency, source}`.
    pub fn suggest(&self, query: &str, limit: usize) -> String {
        serde_json::to_string(&self.candidates(query, limit)).unwrap()
    }

    pub fn transliterate(&self, text: &str) -> String {
        self.engine.transliterate(text)
    }

    /// JSON `{total, shown: [{codes, phonemes}]}`; `total` is a decimal string.
    pub fn segment(&self, query: &str, limit: usize) -> String {
        serde_json::to_string(&self.segmentations(query, limit)).unwrap()
    }
}

impl Default for Ime {
    fn default() -> Self {
        Ime::new()
    }
}
