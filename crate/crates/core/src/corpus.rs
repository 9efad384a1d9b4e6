//! Word-frequency counting over raw Devanagari text.

use std::collections::BTreeMap;
use std::io::Read;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Letters and signs that make up corpus words: U+0900..=U+0963.
/// Danda, double danda and the Devanagari digits fall outside this range.
pub fn is_word_scalar(ch: char) -> bool {
    ('\u{0900}'..='\u{0963}').contains(&ch)
}

/// Counts maximal runs of Devanagari word scalars, NFC-normalized.
pub fn ingest_corpus<R: Read>(mut reader: R) -> Result<BTreeMap<String, u64>> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    ingest_bytes(&bytes)
}

pub fn ingest_bytes(bytes: &[u8]) -> Result<BTreeMap<String, u64>> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::InvalidEncoding {
        valid_up_to: e.valid_up_to(),
    })?;
    let mut counts = BTreeMap::new();
    count_words(text, &mut counts);
    Ok(counts)
}

/// Adds the words of `text` to `counts`.
pub fn count_words(text: &str, counts: &mut BTreeMap<String, u64>) {
    for word in text.split(|c: char| !is_word_scalar(c)).filter(|w| !w.is_empty()) {
        let word: String = word.nfc().collect();
        *counts.entry(word).or_insert(0) += 1;
    }
}
