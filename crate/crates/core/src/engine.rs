//! Roman input to ranked Devanagari candidates.
//!
//! A token is folded into phonetic query keys (its greedy key, the
//! schwa-dropped variant, and the class strings of up to `path_limit`
//! lattice paths). Exact key hits are ranked by frequency; prefix hits are
//! consulted only when there is no exact hit; when the lexicon has nothing,
//! the token is transliterated directly through the character table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use unicode_normalization::{is_nfc, UnicodeNormalization};

use crate::compose::compose;
use crate::error::{Error, Result};
use crate::key::{class_string, normalize_key, schwa_dropped_key, settle_key};
use crate::lexicon::{rank_order, Lexicon, LexiconEntry};
use crate::segment::{build_lattice, enumerate_paths, greedy_tokenize, DEFAULT_PATH_LIMIT};
use crate::table::CharacterTable;

pub const DEFAULT_MAX_SUGGESTIONS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuggestionSource {
    Lexicon,
    Fallback,
}

impl SuggestionSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SuggestionSource::Lexicon => "Lexicon",
            SuggestionSource::Fallback => "Fallback",
        }
    }
}

impl fmt::Display for SuggestionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suggestion {
    pub word: String,
    /// Corpus frequency; always 0 for fallback output.
    pub frequency: u64,
    pub source: SuggestionSource,
}

impl Suggestion {
    fn from_entry(e: &LexiconEntry) -> Self {
        Suggestion {
            word: e.word.clone(),
            frequency: e.frequency,
            source: SuggestionSource::Lexicon,
        }
    }

    fn fallback(word: String) -> Self {
        Suggestion {
            word,
            frequency: 0,
            source: SuggestionSource::Fallback,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    max_suggestions: usize,
    path_limit: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_suggestions: DEFAULT_MAX_SUGGESTIONS,
            path_limit: DEFAULT_PATH_LIMIT,
        }
    }
}

impl EngineConfig {
    /// `None` when either count is zero.
    pub fn new(max_suggestions: usize, path_limit: usize) -> Option<Self> {
        (max_suggestions >= 1 && path_limit >= 1).then_some(EngineConfig {
            max_suggestions,
            path_limit,
        })
    }

    pub fn with_max_suggestions(self, max_suggestions: usize) -> Option<Self> {
        Self::new(max_suggestions, self.path_limit)
    }

    pub fn max_suggestions(&self) -> usize {
        self.max_suggestions
    }

    pub fn path_limit(&self) -> usize {
        self.path_limit
    }
}

/// Character-table-only transliteration of one token.
pub fn direct_map(table: &CharacterTable, roman: &str) -> Result<String> {
    let tokens = greedy_tokenize(table, roman)?;
    compose(&tokens.entries())
}

/// Phonetic keys tried for a token, deduplicated and sorted.
pub fn query_keys(table: &CharacterTable, cfg: &EngineConfig, roman: &str) -> Result<Vec<String>> {
    let mut keys = BTreeSet::new();
    let greedy = normalize_key(table, roman);
    if let Ok(key) = &greedy {
        keys.insert(schwa_dropped_key(key));
        keys.insert(key.clone());
    }
    let lattice = build_lattice(table, roman);
    for path in enumerate_paths(&lattice, cfg.path_limit) {
        let key = settle_key(table, class_string(path.entries()));
        if !key.is_empty() {
            keys.insert(key);
        }
    }
    match greedy {
        Err(e) if keys.is_empty() => Err(e),
        _ => Ok(keys.into_iter().collect()),
    }
}

/// Ranked candidates for one roman token, at most `cfg.max_suggestions`.
pub fn suggest(
    lex: &Lexicon,
    table: &CharacterTable,
    cfg: &EngineConfig,
    roman: &str,
) -> Result<Vec<Suggestion>> {
    if roman.is_empty() {
        return Err(Error::NoSegmentation {
            input: String::new(),
            position: 0,
        });
    }
    let keys = query_keys(table, cfg, roman).unwrap_or_default();
    let mut hits: BTreeMap<&str, &LexiconEntry> = BTreeMap::new();
    for key in &keys {
        for e in lex.lookup_exact(key) {
            hits.insert(&e.word, e);
        }
    }
    if hits.is_empty() {
        for key in &keys {
            for e in lex.lookup_prefix(key, cfg.max_suggestions) {
                hits.insert(&e.word, e);
            }
        }
    }
    let mut ranked: Vec<&LexiconEntry> = hits.into_values().collect();
    ranked.sort_by(|a, b| rank_order(a, b));
    ranked.truncate(cfg.max_suggestions);
    if ranked.is_empty() {
        return Ok(vec![Suggestion::fallback(direct_map(table, roman)?)]);
    }
    Ok(ranked.into_iter().map(Suggestion::from_entry).collect())
}

/// Replaces each run of ASCII letters with its top candidate; everything
/// else (whitespace, punctuation, digits, other scripts) is copied through.
/// Tokens that cannot be segmented are left as typed. The result is NFC.
pub fn transliterate_sentence(
    lex: &Lexicon,
    table: &CharacterTable,
    cfg: &EngineConfig,
    text: &str,
) -> String {
    let mut out = String::with_capacity(text.len() * 3);
    let mut rest = text;
    while !rest.is_empty() {
        let split = rest
            .find(|c: char| c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        out.push_str(&rest[..split]);
        rest = &rest[split..];
        let end = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        if end == 0 {
            continue;
        }
        let token = &rest[..end];
        match suggest(lex, table, cfg, token) {
            Ok(list) => out.push_str(&list[0].word),
            Err(_) => out.push_str(token),
        }
        rest = &rest[end..];
    }
    if is_nfc(&out) {
        out
    } else {
        out.nfc().collect()
    }
}

/// An owned table, lexicon and configuration.
#[derive(Debug, Clone)]
pub struct Engine {
    table: CharacterTable,
    lexicon: Lexicon,
    config: EngineConfig,
}

impl Engine {
    pub fn new(table: CharacterTable, lexicon: Lexicon, config: EngineConfig) -> Self {
        Engine {
            table,
            lexicon,
            config,
        }
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn suggest(&self, roman: &str) -> Result<Vec<Suggestion>> {
        suggest(&self.lexicon, &self.table, &self.config, roman)
    }

    /// Like [`Engine::suggest`] with a different candidate cap.
    pub fn suggest_with_limit(&self, roman: &str, limit: usize) -> Result<Vec<Suggestion>> {
        let cfg = self
            .config
            .with_max_suggestions(limit)
            .unwrap_or(self.config);
        suggest(&self.lexicon, &self.table, &cfg, roman)
    }

    pub fn direct_map(&self, roman: &str) -> Result<String> {
        direct_map(&self.table, roman)
    }

    pub fn transliterate(&self, text: &str) -> String {
        transliterate_sentence(&self.lexicon, &self.table, &self.config, text)
    }
}
