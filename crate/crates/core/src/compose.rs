//! Renders phoneme sequences as Devanagari grapheme clusters.

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::table::{CharacterTable, PhonemeEntry, VIRAMA};

/// Composes a phoneme sequence (one word) into an NFC Devanagari string.
///
/// * a vowel after a consonant becomes its matra; अ adds nothing
/// * any other vowel takes its independent form
/// * a consonant followed by a consonant gets a virama when the pair forms a
///   conjunct (see [`forms_conjunct`]); otherwise it keeps its inherent vowel
/// * diacritics append directly and may not come first
pub fn compose(tokens: &[&PhonemeEntry]) -> Result<String> {
    if let Some(first) = tokens.first() {
        if first.is_diacritic() {
            return Err(Error::IllegalSequence(format!(
                "diacritic {:?} cannot start a word",
                first.devanagari()
            )));
        }
    }
    let mut out = String::with_capacity(tokens.len() * 3);
    for (i, tok) in tokens.iter().enumerate() {
        let after_consonant = i > 0 && tokens[i - 1].is_consonant();
        if tok.is_vowel() {
            if after_consonant {
                if let Some(m) = tok.matra() {
                    out.push(m);
                }
            } else {
                out.push(tok.devanagari());
            }
            continue;
        }
        out.push(tok.devanagari());
        if tok.is_consonant() {
            if let Some(next) = tokens.get(i + 1) {
                if next.is_consonant() && forms_conjunct(tok, next) {
                    out.push(VIRAMA);
                }
            }
        }
    }
    Ok(out.nfc().collect())
}

/// Whether two adjacent consonants join with a virama rather than keeping
/// the first one's inherent vowel.
///
/// Joining pairs: a semivowel second (क्र, प्य, त्व); a sibilant, nasal,
/// र or ल first (स्थ, न्द, र्क, ल्प); ह before a nasal (ह्म); a stop before
/// a stop of its own row with the same voicing (क्क, च्छ, द्ध); a stop before
/// न or म (ग्न, त्न); and क or प before त (क्त, प्त). Everything else, such
/// as ज before ध, is written with the inherent vowel in between.
pub fn forms_conjunct(first: &PhonemeEntry, second: &PhonemeEntry) -> bool {
    let (a, b) = (first.devanagari(), second.devanagari());
    if is_semivowel(b) || is_sibilant(a) || nasal(a) || matches!(a, 'र' | 'ल') {
        return true;
    }
    if a == 'ह' {
        return nasal(b);
    }
    let (Some((row_a, col_a)), second_stop) = (stop(a), stop(b)) else {
        return false;
    };
    if let Some((row_b, col_b)) = second_stop {
        let unaspirated = col_a == 0 || col_a == 2;
        if row_a == row_b && unaspirated && (col_b == col_a || col_b == col_a + 1) {
            return true;
        }
    }
    matches!(b, 'न' | 'म') || (matches!(a, 'क' | 'प') && b == 'त')
}

/// Makes every inherent vowel explicit: each consonant that [`compose`]
/// renders with its inherent vowel is followed by अ.
///
/// The result is the token sequence that greedy tokenization recovers from
/// the canonical romanization of `compose(tokens)`.
pub fn with_inherent_vowels<'t>(
    table: &'t CharacterTable,
    tokens: &[&'t PhonemeEntry],
) -> Vec<&'t PhonemeEntry> {
    let inherent = table.inherent_vowel();
    let mut out = Vec::with_capacity(tokens.len() * 2);
    for (i, &tok) in tokens.iter().enumerate() {
        out.push(tok);
        if !tok.is_consonant() {
            continue;
        }
        let bare = match tokens.get(i + 1) {
            Some(next) if next.is_vowel() => false,
            Some(next) if next.is_consonant() => !forms_conjunct(tok, next),
            _ => true,
        };
        if bare {
            out.push(inherent);
        }
    }
    out
}

fn is_semivowel(c: char) -> bool {
    matches!(c, 'य' | 'र' | 'ल' | 'व')
}

fn is_sibilant(c: char) -> bool {
    matches!(c, 'श' | 'ष' | 'स')
}

/// Row and column of a consonant in the 5x5 grid of stops and nasals
/// (column 0 voiceless, 1 voiceless aspirate, 2 voiced, 3 voiced aspirate, 4 nasal).
fn grid(c: char) -> Option<(u32, u32)> {
    let offset = (c as u32).checked_sub('क' as u32)?;
    // त-row starts at U+0924, प-row at U+092A (U+0929 is the nukta form ऩ).
    match offset {
        0..=14 => Some((offset / 5, offset % 5)),
        15..=19 => Some((3, offset - 15)),
        21..=25 => Some((4, offset - 21)),
        _ => None,
    }
}

fn stop(c: char) -> Option<(u32, u32)> {
    grid(c).filter(|&(_, col)| col < 4)
}

fn nasal(c: char) -> bool {
    matches!(grid(c), Some((_, 4)))
}
