//! Phonetic keys: the folded spelling under which lexicon words are indexed.
//!
//! Each phoneme maps to a class string. Long and short vowels share a class
//! (आ and अ are both `a`), ऐ folds into `e` and औ into `o`, and the retroflex
//! and nasal escapes fold onto their lowercase dental or `n` counterparts.
//! Variant spellings (`w`, `f`, `z`, `q`) need no extra rule: they already
//! tokenize to व, फ, ज and क.
//!
//! Class strings never contain `a` except as the class of अ/आ itself, which
//! lets [`schwa_dropped_key`] work on the key text alone.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::segment::greedy_tokenize;
use crate::table::{CharacterTable, PhonemeEntry};

/// The key class of a single phoneme.
pub fn key_class(entry: &PhonemeEntry) -> Cow<'static, str> {
    let fixed = match entry.devanagari() {
        'अ' | 'आ' => "a",
        'इ' | 'ई' => "i",
        'उ' | 'ऊ' => "u",
        'ए' | 'ऐ' => "e",
        'ओ' | 'औ' => "o",
        'ऋ' => "ri",
        'ं' | 'ण' | 'ङ' | 'ञ' => "n",
        'ः' => "h",
        _ => return Cow::Owned(entry.canonical_code().to_ascii_lowercase()),
    };
    Cow::Borrowed(fixed)
}

/// Concatenated key classes of a phoneme sequence.
pub fn class_string<'a>(entries: impl IntoIterator<Item = &'a PhonemeEntry>) -> String {
    entries.into_iter().map(key_class).collect()
}

/// Folds roman input to its phonetic key: case folding, greedy
/// tokenization, then class folding. `"raajadhaanee"` and `"rajadhani"`
/// both give `"rajadhani"`.
///
/// Adjacent classes can spell a longer code (अ+उ gives `"au"`, which reads
/// as औ), so the class string is re-read until it stops changing.
pub fn normalize_key(table: &CharacterTable, roman: &str) -> Result<String> {
    if roman.is_empty() {
        return Err(Error::NoSegmentation {
            input: String::new(),
            position: 0,
        });
    }
    let tokens = greedy_tokenize(table, roman)?;
    Ok(settle_key(table, class_string(tokens.entries())))
}

/// Re-reads a class string until it is a fixed point. Each rewrite must
/// shorten the key, which bounds the loop for any table.
pub(crate) fn settle_key(table: &CharacterTable, mut key: String) -> String {
    while let Ok(tokens) = greedy_tokenize(table, &key) {
        let next = class_string(tokens.entries());
        if next.len() >= key.len() {
            break;
        }
        key = next;
    }
    key
}

/// Deletes every `a` segment that is neither first nor last in the key.
///
/// `"rajadhani"` becomes `"rjdhni"`; `"kama"` becomes `"kma"` while `"kam"`
/// becomes `"km"`, keeping कमा and कम apart.
pub fn schwa_dropped_key(key: &str) -> String {
    let last = key.len().saturating_sub(1);
    key.char_indices()
        .filter(|&(i, c)| c != 'a' || i == 0 || i == last)
        .map(|(_, c)| c)
        .collect()
}
