//! Frequency lexicon: Devanagari words indexed under their phonetic keys.
//!
//! Each word is stored under two keys, the full key of its canonical
//! romanization and the same key with medial `a` segments removed, so that
//! `rajdhani` and `raajadhaanee` both reach राजधानी.
//!
//! On disk a lexicon is UTF-8 TSV: a `#deva-lexicon v1` header line, then
//! one `word TAB frequency TAB keys` row per word, keys comma-separated
//! (`राजधानी`, `5`, `rajadhani,rjdhni`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use unicode_normalization::{is_nfc, UnicodeNormalization};

use crate::error::{Error, Result};
use crate::key::{normalize_key, schwa_dropped_key};
use crate::table::CharacterTable;
use crate::trie::KeyTrie;

pub const LEXICON_HEADER: &str = "#deva-lexicon v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub word: String,
    pub frequency: u64,
    pub keys: BTreeSet<String>,
}

/// Candidate order: frequency descending, then shorter word, then code-point order.
pub fn rank_order(a: &LexiconEntry, b: &LexiconEntry) -> Ordering {
    b.frequency
        .cmp(&a.frequency)
        .then_with(|| a.word.chars().count().cmp(&b.word.chars().count()))
        .then_with(|| a.word.cmp(&b.word))
}

/// A word that could not be keyed while building a lexicon.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedWord {
    pub word: String,
    pub error: Error,
}

#[derive(Debug, Clone)]
pub struct LexiconBuild {
    pub lexicon: Lexicon,
    pub skipped: Vec<SkippedWord>,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: KeyTrie,
    total_tokens: u64,
}

/// The two lookup keys of a word: its full key and the schwa-dropped variant.
pub fn word_keys(table: &CharacterTable, word: &str) -> Result<BTreeSet<String>> {
    let roman = table.reverse_transliterate(word)?;
    let key = normalize_key(table, &roman)?;
    let dropped = schwa_dropped_key(&key);
    Ok(BTreeSet::from([key, dropped]))
}

impl Lexicon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Keys every word through the table. Words the table cannot romanize are
    /// skipped and reported; zero counts are dropped; duplicate words (after
    /// NFC) have their counts summed.
    pub fn build<I, S>(freqs: I, table: &CharacterTable) -> LexiconBuild
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        let mut merged: BTreeMap<String, u64> = BTreeMap::new();
        for (word, freq) in freqs {
            let word: String = word.as_ref().nfc().collect();
            *merged.entry(word).or_insert(0) += freq;
        }
        let mut rows = BTreeMap::new();
        let mut skipped = Vec::new();
        for (word, freq) in merged {
            if freq == 0 || word.is_empty() {
                continue;
            }
            match word_keys(table, &word) {
                Ok(keys) => {
                    rows.insert(word, (freq, keys));
                }
                Err(error) => {
                    log::warn!("skipping {word:?}: {error}");
                    skipped.push(SkippedWord { word, error });
                }
            }
        }
        LexiconBuild {
            lexicon: Self::from_rows(rows),
            skipped,
        }
    }

    fn from_rows(rows: BTreeMap<String, (u64, BTreeSet<String>)>) -> Self {
        let mut index = KeyTrie::new();
        let mut entries = Vec::with_capacity(rows.len());
        let mut total_tokens = 0u64;
        for (id, (word, (frequency, keys))) in rows.into_iter().enumerate() {
            for key in &keys {
                index.insert(key, id);
            }
            total_tokens += frequency;
            entries.push(LexiconEntry {
                word,
                frequency,
                keys,
            });
        }
        Lexicon {
            entries,
            index,
            total_tokens,
        }
    }

    /// Entries ordered by word.
    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all frequencies.
    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn get(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries
            .binary_search_by(|e| e.word.as_str().cmp(word))
            .ok()
            .map(|i| &self.entries[i])
    }

    /// Every (key, word) pair held by the index.
    pub fn index_pairs(&self) -> Vec<(String, &str)> {
        self.index
            .pairs()
            .into_iter()
            .map(|(k, id)| (k, self.entries[id].word.as_str()))
            .collect()
    }

    /// Entries having `key` among their keys, in word order.
    pub fn lookup_exact(&self, key: &str) -> Vec<&LexiconEntry> {
        let mut ids = self.index.get(key).to_vec();
        ids.sort_unstable();
        ids.into_iter().map(|id| &self.entries[id]).collect()
    }

    /// The `limit` best-ranked entries having a key that starts with `prefix`.
    pub fn lookup_prefix(&self, prefix: &str, limit: usize) -> Vec<&LexiconEntry> {
        let mut hits: Vec<&LexiconEntry> = self
            .index
            .with_prefix(prefix)
            .into_iter()
            .map(|id| &self.entries[id])
            .collect();
        hits.sort_by(|a, b| rank_order(a, b));
        hits.truncate(limit);
        hits
    }

    pub fn save<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{LEXICON_HEADER}")?;
        for e in &self.entries {
            let keys: Vec<&str> = e.keys.iter().map(String::as_str).collect();
            writeln!(out, "{}\t{}\t{}", e.word, e.frequency, keys.join(","))?;
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a lexicon file. Rows with an empty key column are keyed through
    /// `table`; rows repeating a word are merged (frequencies summed, keys united).
    pub fn load<R: BufRead>(source: R, table: &CharacterTable) -> Result<Self> {
        let mut lines = source.lines();
        match lines.next().transpose()? {
            Some(h) if h.trim_end() == LEXICON_HEADER => {}
            _ => return Err(Error::malformed(1, format!("expected header {LEXICON_HEADER:?}"))),
        }
        let mut rows: BTreeMap<String, (u64, BTreeSet<String>)> = BTreeMap::new();
        for (idx, line) in lines.enumerate() {
            let line = line?;
            let lineno = idx + 2;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::malformed(
                    lineno,
                    format!("expected 3 fields, found {}", fields.len()),
                ));
            }
            let word = fields[0];
            if word.is_empty() || !is_nfc(word) {
                return Err(Error::malformed(lineno, format!("word {word:?} is not NFC")));
            }
            let frequency: u64 = fields[1]
                .parse()
                .ok()
                .filter(|&f| f >= 1)
                .ok_or_else(|| {
                    Error::malformed(lineno, format!("bad frequency {:?}", fields[1]))
                })?;
            let keys = if fields[2].is_empty() {
                word_keys(table, word).map_err(|e| Error::malformed(lineno, e))?
            } else {
                fields[2]
                    .split(',')
                    .map(|k| {
                        if !k.is_empty() && k.chars().all(|c| c.is_ascii_lowercase()) {
                            Ok(k.to_string())
                        } else {
                            Err(Error::malformed(lineno, format!("bad key {k:?}")))
                        }
                    })
                    .collect::<Result<BTreeSet<_>>>()?
            };
            let slot = rows.entry(word.to_string()).or_default();
            slot.0 += frequency;
            slot.1.extend(keys);
        }
        Ok(Self::from_rows(rows))
    }
}
