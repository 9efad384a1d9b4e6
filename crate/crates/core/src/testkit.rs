//! Reference implementations and generators for tests.
//!
//! Everything here is deliberately naive and shares no code path with the
//! modules it checks: path counting recurses over raw code strings, edit
//! distance is the textbook exponential recursion.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::table::{CharacterTable, PhonemeEntry};

/// All (code, entry) pairs of the table, every kind of code included.
pub fn all_codes(table: &CharacterTable) -> Vec<(&str, &PhonemeEntry)> {
    table
        .entries()
        .iter()
        .flat_map(|e| {
            std::iter::once(e.canonical_code())
                .chain(e.alt_codes().iter().map(String::as_str))
                .map(move |c| (c, e))
        })
        .collect()
}

/// Number of ways to split `input` into table codes (one way per distinct
/// (code, entry) choice at each step), by plain recursion.
pub fn brute_force_path_count(table: &CharacterTable, input: &str) -> u64 {
    fn go(codes: &[(&str, &PhonemeEntry)], rest: &str) -> u64 {
        if rest.is_empty() {
            return 1;
        }
        codes
            .iter()
            .filter(|(c, _)| rest.starts_with(c))
            .map(|(c, _)| go(codes, &rest[c.len()..]))
            .sum()
    }
    go(&all_codes(table), input)
}

/// Every segmentation of `input` as a list of (code, devanagari) pairs.
pub fn brute_force_paths(table: &CharacterTable, input: &str) -> Vec<Vec<(String, char)>> {
    fn go(
        codes: &[(&str, &PhonemeEntry)],
        rest: &str,
        prefix: &mut Vec<(String, char)>,
        out: &mut Vec<Vec<(String, char)>>,
    ) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for (c, e) in codes {
            if let Some(tail) = rest.strip_prefix(c) {
                prefix.push((c.to_string(), e.devanagari()));
                go(codes, tail, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&all_codes(table), input, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive recursive Levenshtein distance.
pub fn recursive_edit_distance(a: &[char], b: &[char]) -> usize {
    match (a.split_first(), b.split_first()) {
        (None, _) => b.len(),
        (_, None) => a.len(),
        (Some((x, ra)), Some((y, rb))) => {
            let sub = recursive_edit_distance(ra, rb) + usize::from(x != y);
            let del = recursive_edit_distance(ra, b) + 1;
            let ins = recursive_edit_distance(a, rb) + 1;
            sub.min(del).min(ins)
        }
    }
}

/// A random string over `alphabet` of length `0..=max_len`.
pub fn random_string<R: Rng>(rng: &mut R, alphabet: &[char], max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect()
}

/// Whether `first`'s code followed by `second`'s code reads as one longer
/// typeable code (क+ह → "kh" → ख), which makes the pair ambiguous in roman.
pub fn pair_is_ambiguous(table: &CharacterTable, first: &PhonemeEntry, second: &PhonemeEntry) -> bool {
    let joined = format!("{}{}", first.canonical_code(), second.canonical_code());
    let head = first.canonical_code().len();
    (head + 1..=joined.len()).any(|end| {
        table.entries().iter().any(|e| {
            e.canonical_code() == &joined[..end]
                || (!e.is_escape() && e.alt_codes().iter().any(|c| c == &joined[..end]))
        })
    })
}

/// A random word in the unambiguous no-escape fragment: optional initial
/// independent vowel, one to four syllables of one or two onset consonants
/// and a vowel, and an optional final consonant.
pub fn random_word<'t, R: Rng>(rng: &mut R, table: &'t CharacterTable) -> Vec<&'t PhonemeEntry> {
    let plain = |pred: fn(&PhonemeEntry) -> bool| -> Vec<&'t PhonemeEntry> {
        table
            .entries()
            .iter()
            .filter(|e| pred(e) && !e.is_escape())
            .collect()
    };
    let consonants = plain(PhonemeEntry::is_consonant);
    let vowels = plain(PhonemeEntry::is_vowel);
    let mut word: Vec<&PhonemeEntry> = Vec::new();
    if rng.gen_bool(0.2) {
        word.push(vowels.choose(rng).unwrap());
    }
    for _ in 0..rng.gen_range(1..=4) {
        let first = *consonants.choose(rng).unwrap();
        word.push(first);
        if rng.gen_bool(0.3) {
            let second = loop {
                let c = *consonants.choose(rng).unwrap();
                if !pair_is_ambiguous(table, first, c) {
                    break c;
                }
            };
            word.push(second);
        }
        word.push(vowels.choose(rng).unwrap());
    }
    if rng.gen_bool(0.3) {
        word.push(consonants.choose(rng).unwrap());
    }
    word
}
