//! The Devanagari phoneme table: canonical roman codes, alternate spellings,
//! dependent vowel signs, and the reverse (Devanagari to roman) mapping used
//! to key the lexicon.
//!
//! Codes come in three kinds. Canonical codes are what a user types by
//! default; ambiguous phonemes (the retroflex series, ङ ञ ऋ and the two
//! diacritics) use uppercase escapes such as `T` or `NG` so that the dental
//! series keeps its lowercase spellings. Alternate codes are common variant
//! spellings (`ee` for ई, `w` for व). The lowercase spellings of escaped
//! phonemes are kept as *lexicon-only* alternates: they take part in lattice
//! matching against the lexicon but never in direct mapping.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Devanagari sign U+094D, which suppresses a consonant's inherent vowel.
pub const VIRAMA: char = '\u{094D}';

const DEFAULT_TABLE: &str = include_str!("default_table.tsv");

/// Number of phonemes in a complete table: 11 vowels, 33 consonants, 2 diacritics.
pub const TABLE_SIZE: usize = 46;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhonemeCategory {
    IndependentVowel,
    Consonant,
    Diacritic,
}

impl PhonemeCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            PhonemeCategory::IndependentVowel => "IndependentVowel",
            PhonemeCategory::Consonant => "Consonant",
            PhonemeCategory::Diacritic => "Diacritic",
        }
    }
}

impl fmt::Display for PhonemeCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PhonemeCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "IndependentVowel" => Ok(PhonemeCategory::IndependentVowel),
            "Consonant" => Ok(PhonemeCategory::Consonant),
            "Diacritic" => Ok(PhonemeCategory::Diacritic),
            other => Err(format!("unknown category {other:?}")),
        }
    }
}

/// How a roman code relates to the phoneme it spells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeKind {
    Canonical,
    Alternate,
    /// Alternate spelling of an escaped phoneme; matched only against the lexicon.
    LexiconOnly,
}

impl CodeKind {
    /// Whether direct mapping (greedy tokenization) may use this code.
    pub fn is_typeable(self) -> bool {
        !matches!(self, CodeKind::LexiconOnly)
    }
}

/// One Devanagari phoneme and its roman spellings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhonemeEntry {
    devanagari: char,
    canonical_code: String,
    alt_codes: Vec<String>,
    category: PhonemeCategory,
    matra: Option<char>,
    ordinal: usize,
}

impl PhonemeEntry {
    pub fn devanagari(&self) -> char {
        self.devanagari
    }

    pub fn canonical_code(&self) -> &str {
        &self.canonical_code
    }

    pub fn alt_codes(&self) -> &[String] {
        &self.alt_codes
    }

    pub fn category(&self) -> PhonemeCategory {
        self.category
    }

    /// Dependent vowel sign; `None` for consonants, diacritics and the inherent vowel.
    pub fn matra(&self) -> Option<char> {
        self.matra
    }

    /// Position of the entry in its table.
    pub fn ordinal(&self) -> usize {
        self.ordinal
    }

    pub fn is_vowel(&self) -> bool {
        self.category == PhonemeCategory::IndependentVowel
    }

    pub fn is_consonant(&self) -> bool {
        self.category == PhonemeCategory::Consonant
    }

    pub fn is_diacritic(&self) -> bool {
        self.category == PhonemeCategory::Diacritic
    }

    /// The inherent vowel अ: a vowel with no dependent sign.
    pub fn is_inherent_vowel(&self) -> bool {
        self.is_vowel() && self.matra.is_none()
    }

    /// True when the canonical code is an uppercase escape (`T`, `NG`, `M`, ...).
    pub fn is_escape(&self) -> bool {
        self.canonical_code.chars().any(|c| c.is_ascii_uppercase())
    }

    fn code_kind(&self, code: &str) -> Option<CodeKind> {
        if self.canonical_code == code {
            Some(CodeKind::Canonical)
        } else if self.alt_codes.iter().any(|c| c == code) {
            Some(if self.is_escape() {
                CodeKind::LexiconOnly
            } else {
                CodeKind::Alternate
            })
        } else {
            None
        }
    }
}

/// A code match: the entry's position in the table plus the kind of code matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CodeMatch {
    pub(crate) entry: usize,
    pub(crate) kind: CodeKind,
}

/// The immutable phoneme table with code and character indexes.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    entries: Vec<PhonemeEntry>,
    code_index: HashMap<String, Vec<CodeMatch>>,
    char_index: HashMap<char, usize>,
    matra_index: HashMap<char, usize>,
    escapes: Vec<String>,
    inherent: usize,
    max_code_len: usize,
}

/// The built-in table.
pub fn load_default_table() -> CharacterTable {
    CharacterTable::load_default()
}

impl Default for CharacterTable {
    fn default() -> Self {
        Self::load_default()
    }
}

impl CharacterTable {
    pub fn load_default() -> Self {
        Self::from_tsv(DEFAULT_TABLE.as_bytes()).expect("built-in character table is valid")
    }

    /// Reads a table override: one row per phoneme,
    /// `devanagari TAB canonical TAB alt,codes TAB category TAB matra-or-dash`.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_tsv<R: BufRead>(reader: R) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 5 {
                return Err(Error::malformed(
                    lineno,
                    format!("expected 5 fields, found {}", fields.len()),
                ));
            }
            let devanagari = single_scalar(fields[0])
                .ok_or_else(|| Error::malformed(lineno, "first field must be one scalar"))?;
            let alt_codes = match fields[2].trim() {
                "" | "-" => Vec::new(),
                list => list.split(',').map(|c| c.trim().to_string()).collect(),
            };
            let category = fields[3]
                .trim()
                .parse::<PhonemeCategory>()
                .map_err(|e| Error::malformed(lineno, e))?;
            let matra = match fields[4].trim() {
                "-" | "" => None,
                m => Some(
                    single_scalar(m)
                        .ok_or_else(|| Error::malformed(lineno, "matra must be one scalar"))?,
                ),
            };
            entries.push(PhonemeEntry {
                devanagari,
                canonical_code: fields[1].trim().to_string(),
                alt_codes,
                category,
                matra,
                ordinal: entries.len(),
            });
        }
        Self::from_entries(entries)
    }

    fn from_entries(entries: Vec<PhonemeEntry>) -> Result<Self> {
        if entries.len() != TABLE_SIZE {
            return Err(Error::InvalidTable(format!(
                "expected {TABLE_SIZE} entries, found {}",
                entries.len()
            )));
        }
        let mut code_index: HashMap<String, Vec<CodeMatch>> = HashMap::new();
        let mut char_index = HashMap::new();
        let mut matra_index = HashMap::new();
        let mut escapes = Vec::new();
        let mut inherent = None;
        let mut max_code_len = 0;

        for (i, e) in entries.iter().enumerate() {
            if !is_devanagari(e.devanagari) {
                return Err(Error::InvalidTable(format!(
                    "{:?} is outside the Devanagari block",
                    e.devanagari
                )));
            }
            if char_index.insert(e.devanagari, i).is_some() {
                return Err(Error::InvalidTable(format!("duplicate entry {:?}", e.devanagari)));
            }
            if e.alt_codes.contains(&e.canonical_code) {
                return Err(Error::InvalidTable(format!(
                    "{:?}: canonical code repeated among alternates",
                    e.devanagari
                )));
            }
            for code in std::iter::once(&e.canonical_code).chain(&e.alt_codes) {
                if code.is_empty() || !code.chars().all(|c| c.is_ascii_alphabetic()) {
                    return Err(Error::InvalidTable(format!(
                        "{:?}: code {code:?} must be nonempty ASCII letters",
                        e.devanagari
                    )));
                }
                max_code_len = max_code_len.max(code.len());
            }
            if e.is_escape() {
                escapes.push(e.canonical_code.clone());
                if e.alt_codes.iter().any(|c| c.chars().any(|ch| ch.is_ascii_uppercase())) {
                    return Err(Error::InvalidTable(format!(
                        "{:?}: alternates of an escaped phoneme must be lowercase",
                        e.devanagari
                    )));
                }
            }
            match (e.category, e.matra) {
                (PhonemeCategory::IndependentVowel, Some(m)) => {
                    if !is_devanagari(m) || matra_index.insert(m, i).is_some() {
                        return Err(Error::InvalidTable(format!("bad matra {m:?}")));
                    }
                }
                (PhonemeCategory::IndependentVowel, None) => {
                    if inherent.replace(i).is_some() {
                        return Err(Error::InvalidTable(
                            "more than one vowel without a matra".into(),
                        ));
                    }
                }
                (_, Some(_)) => {
                    return Err(Error::InvalidTable(format!(
                        "{:?}: only vowels carry a matra",
                        e.devanagari
                    )))
                }
                (_, None) => {}
            }
            for code in std::iter::once(&e.canonical_code).chain(&e.alt_codes) {
                let kind = e.code_kind(code).expect("code belongs to entry");
                let slot = code_index.entry(code.clone()).or_default();
                if kind == CodeKind::Canonical
                    && slot.iter().any(|m| m.kind == CodeKind::Canonical)
                {
                    return Err(Error::InvalidTable(format!("canonical code {code:?} reused")));
                }
                slot.push(CodeMatch { entry: i, kind });
            }
        }
        let inherent = inherent
            .ok_or_else(|| Error::InvalidTable("no inherent vowel (vowel without matra)".into()))?;
        // Longest escapes first so that `Th` wins over `T` during case folding.
        escapes.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        Ok(CharacterTable {
            entries,
            code_index,
            char_index,
            matra_index,
            escapes,
            inherent,
            max_code_len,
        })
    }

    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        for e in &self.entries {
            let matra = e.matra.map(String::from).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                e.devanagari,
                e.canonical_code,
                e.alt_codes.join(","),
                e.category,
                matra
            )?;
        }
        Ok(())
    }

    pub fn entries(&self) -> &[PhonemeEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, ordinal: usize) -> &PhonemeEntry {
        &self.entries[ordinal]
    }

    /// The inherent vowel अ.
    pub fn inherent_vowel(&self) -> &PhonemeEntry {
        &self.entries[self.inherent]
    }

    /// Longest code length in bytes.
    pub fn max_code_len(&self) -> usize {
        self.max_code_len
    }

    /// All entries spelled by `code`, canonically or as an alternate, in table order.
    pub fn lookup_by_code(&self, code: &str) -> Vec<&PhonemeEntry> {
        self.code_index
            .get(code)
            .map(|ms| ms.iter().map(|m| &self.entries[m.entry]).collect())
            .unwrap_or_default()
    }

    pub(crate) fn code_matches(&self, code: &str) -> &[CodeMatch] {
        self.code_index.get(code).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Independent forms only; matras resolve through [`CharacterTable::vowel_for_matra`].
    pub fn lookup_by_char(&self, ch: char) -> Option<&PhonemeEntry> {
        self.char_index.get(&ch).map(|&i| &self.entries[i])
    }

    pub fn vowel_for_matra(&self, matra: char) -> Option<&PhonemeEntry> {
        self.matra_index.get(&matra).map(|&i| &self.entries[i])
    }

    /// Escape codes (uppercase canonical codes), longest first.
    pub fn escapes(&self) -> &[String] {
        &self.escapes
    }

    /// Lowercases roman input except where an uppercase letter starts an escape code.
    ///
    /// `"Tamatar"` keeps its `T` (ट) while `"Ganga"` becomes `"ganga"` since no
    /// escape begins with `G`.
    pub fn fold_case(&self, input: &str) -> String {
        let mut out = String::with_capacity(input.len());
        let mut rest = input;
        while let Some(ch) = rest.chars().next() {
            if ch.is_ascii_uppercase() {
                if let Some(esc) = self.escapes.iter().find(|e| rest.starts_with(e.as_str())) {
                    out.push_str(esc);
                    rest = &rest[esc.len()..];
                    continue;
                }
                out.push(ch.to_ascii_lowercase());
            } else {
                out.push(ch);
            }
            rest = &rest[ch.len_utf8()..];
        }
        out
    }

    /// Deterministic canonical romanization of a Devanagari word.
    ///
    /// A consonant emits its code plus the following vowel sign's code, or
    /// only its code before a virama, or its code plus `a` otherwise (the
    /// inherent vowel, word-final included). Independent vowels and
    /// diacritics emit their own code.
    pub fn reverse_transliterate(&self, word: &str) -> Result<String> {
        let word: String = word.nfc().collect();
        let unmapped = |ch: char| Error::UnmappedCharacter {
            ch,
            word: word.clone(),
        };
        let inherent_code = self.inherent_vowel().canonical_code();
        let mut out = String::with_capacity(word.len() * 2);
        let mut chars = word.chars().peekable();
        while let Some(ch) = chars.next() {
            let entry = self.lookup_by_char(ch).ok_or_else(|| unmapped(ch))?;
            out.push_str(entry.canonical_code());
            if !entry.is_consonant() {
                continue;
            }
            match chars.peek().copied() {
                Some(VIRAMA) => {
                    chars.next();
                }
                Some(next) => match self.vowel_for_matra(next) {
                    Some(vowel) => {
                        chars.next();
                        out.push_str(vowel.canonical_code());
                    }
                    None => out.push_str(inherent_code),
                },
                None => out.push_str(inherent_code),
            }
        }
        Ok(out)
    }
}

/// Whether `ch` lies in the Devanagari block U+0900..=U+097F.
pub fn is_devanagari(ch: char) -> bool {
    ('\u{0900}'..='\u{097F}').contains(&ch)
}

fn single_scalar(s: &str) -> Option<char> {
    let mut it = s.trim().chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}
