use std::collections::BTreeMap;

use hindi_ime::compose::with_inherent_vowels;
use hindi_ime::key::class_string;
use hindi_ime::testkit::{
    brute_force_path_count, brute_force_paths, random_string, random_word,
    recursive_edit_distance,
};
use hindi_ime::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn table() -> CharacterTable {
    CharacterTable::load_default()
}

const ROMAN: &[char] = &[
    'a', 'a', 'i', 'u', 'e', 'o', 'k', 'h', 'g', 'c', 'j', 't', 'd', 'n', 'p', 'b', 'm', 'y', 'r',
    'l', 'v', 's', 'w', 'f', 'z', 'q',
];

#[test]
fn random_words_round_trip_through_roman() {
    let t = table();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..2000 {
        let seq = random_word(&mut rng, &t);
        let word = compose(&seq).unwrap();
        let roman = t.reverse_transliterate(&word).unwrap();
        assert_eq!(direct_map(&t, &roman).unwrap(), word, "via {roman:?}");
        let back = greedy_tokenize(&t, &roman).unwrap().entries();
        assert_eq!(back, with_inherent_vowels(&t, &seq), "{word}");
    }
}

#[test]
fn lattice_path_count_matches_recursion() {
    let t = table();
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..300 {
        let input = random_string(&mut rng, ROMAN, 8);
        let lattice = build_lattice(&t, &input);
        let paths = enumerate_paths(&lattice, usize::MAX);
        assert_eq!(paths.len() as u64, brute_force_path_count(&t, &input), "{input}");
        assert_eq!(lattice.count_paths(), paths.len() as u128);
    }
}

#[test]
fn enumerated_paths_equal_brute_force_set() {
    let t = table();
    for input in ["chai", "khana", "rajdhani", "thaa", "shh"] {
        let lattice = build_lattice(&t, input);
        let mut ours: Vec<Vec<(String, char)>> = enumerate_paths(&lattice, usize::MAX)
            .iter()
            .map(|p| {
                p.codes(input)
                    .into_iter()
                    .zip(p.entries())
                    .map(|(c, e)| (c.to_string(), e.devanagari()))
                    .collect()
            })
            .collect();
        let mut oracle = brute_force_paths(&t, input);
        ours.sort();
        oracle.sort();
        assert_eq!(ours, oracle, "{input}");
    }
}

#[test]
fn chai_paths() {
    let t = table();
    let paths = brute_force_paths(&t, "chai");
    let rendered: Vec<String> = paths
        .iter()
        .map(|p| p.iter().map(|(_, c)| *c).collect())
        .collect();
    assert!(rendered.contains(&"छऐ".to_string()));
    assert!(rendered.contains(&"चहऐ".to_string()));
    assert_eq!(
        enumerate_paths(&build_lattice(&t, "chai"), usize::MAX).len(),
        paths.len()
    );
}

#[test]
fn edit_distance_exhaustive_small() {
    fn all_strings(max: usize) -> Vec<String> {
        let mut out = vec![String::new()];
        let mut layer = vec![String::new()];
        for _ in 0..max {
            layer = layer
                .iter()
                .flat_map(|s| ['a', 'b', 'c'].map(|c| format!("{s}{c}")))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
    let words = all_strings(3);
    for a in &words {
        for b in &words {
            let ca: Vec<char> = a.chars().collect();
            let cb: Vec<char> = b.chars().collect();
            assert_eq!(edit_distance(a, b), recursive_edit_distance(&ca, &cb));
        }
    }
}

#[test]
fn ingest_matches_hand_counts() {
    let fixture = include_str!("fixtures/corpus_50.txt");
    let counts = ingest_corpus(fixture.as_bytes()).unwrap();
    let expected: BTreeMap<String, u64> = include_str!("fixtures/corpus_50.counts.tsv")
        .lines()
        .map(|l| {
            let (w, n) = l.split_once('\t').unwrap();
            (w.to_string(), n.parse().unwrap())
        })
        .collect();
    assert_eq!(counts, expected);
    assert_eq!(counts.values().sum::<u64>(), 50);
}

#[test]
fn ingest_matches_single_pass_counter() {
    let text = include_str!("fixtures/corpus_50.txt");
    let mut oracle: BTreeMap<String, u64> = BTreeMap::new();
    let mut current = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ('\u{0900}'..='\u{0963}').contains(&ch) {
            current.push(ch);
        } else if !current.is_empty() {
            *oracle.entry(std::mem::take(&mut current)).or_default() += 1;
        }
    }
    assert_eq!(ingest_corpus(text.as_bytes()).unwrap(), oracle);
}

#[test]
fn lexicon_index_is_consistent() {
    let t = table();
    let text = include_str!("fixtures/corpus_50.txt");
    let lex = Lexicon::build(ingest_corpus(text.as_bytes()).unwrap(), &t).lexicon;
    let pairs = lex.index_pairs();
    let mut expected = Vec::new();
    for e in lex.entries() {
        for k in &e.keys {
            assert!(lex.lookup_exact(k).contains(&e));
            let prefix_hits = lex.lookup_prefix(k, usize::MAX);
            for hit in lex.lookup_exact(k) {
                assert!(prefix_hits.contains(&hit));
            }
            expected.push((k.clone(), e.word.as_str()));
        }
    }
    let mut got = pairs;
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    assert_eq!(lex.total_tokens(), lex.entries().iter().map(|e| e.frequency).sum::<u64>());
}

#[test]
fn save_load_preserves_lookups() {
    let t = table();
    let text = include_str!("fixtures/corpus_50.txt");
    let lex = Lexicon::build(ingest_corpus(text.as_bytes()).unwrap(), &t).lexicon;
    let mut buf = Vec::new();
    lex.save(&mut buf).unwrap();
    let back = Lexicon::load(&buf[..], &t).unwrap();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let q = random_string(&mut rng, ROMAN, 5);
        if q.is_empty() {
            continue;
        }
        assert_eq!(back.lookup_prefix(&q, 10), lex.lookup_prefix(&q, 10));
        assert_eq!(back.lookup_exact(&q), lex.lookup_exact(&q));
        let cfg = EngineConfig::default();
        assert_eq!(suggest(&back, &t, &cfg, &q), suggest(&lex, &t, &cfg, &q));
    }
}

#[test]
fn suggestions_are_sorted_and_stable_under_scaling() {
    let t = table();
    let text = include_str!("fixtures/corpus_50.txt");
    let counts = ingest_corpus(text.as_bytes()).unwrap();
    let lex = Lexicon::build(counts.clone(), &t).lexicon;
    let scaled = Lexicon::build(counts.into_iter().map(|(w, f)| (w, f * 7)), &t).lexicon;
    let cfg = EngineConfig::default();
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let q = random_string(&mut rng, ROMAN, 6);
        if q.is_empty() {
            continue;
        }
        let a = suggest(&lex, &t, &cfg, &q).unwrap();
        let b = suggest(&scaled, &t, &cfg, &q).unwrap();
        assert!(a.len() <= 5 && !a.is_empty());
        assert!(a.windows(2).all(|w| w[0].frequency >= w[1].frequency));
        let words = |v: &[Suggestion]| v.iter().map(|s| s.word.clone()).collect::<Vec<_>>();
        assert_eq!(words(&a), words(&b));
        assert_eq!(a, suggest(&lex, &t, &cfg, &q).unwrap());
    }
}

#[test]
fn empty_lexicon_sentence_is_wordwise_direct_map() {
    let t = table();
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let words: Vec<String> = (0..4)
            .map(|_| random_string(&mut rng, ROMAN, 7))
            .filter(|w| !w.is_empty())
            .collect();
        let sentence = words.join(" ");
        let expected: Vec<String> = words.iter().map(|w| direct_map(&t, w).unwrap()).collect();
        let got = transliterate_sentence(&Lexicon::empty(), &t, &EngineConfig::default(), &sentence);
        assert_eq!(got, expected.join(" "));
    }
}

proptest! {
    #[test]
    fn edit_distance_is_a_metric(a in "[a-e]{0,6}", b in "[a-e]{0,6}", c in "[a-e]{0,6}") {
        prop_assert_eq!(edit_distance(&a, &a), 0);
        prop_assert_eq!(edit_distance(&a, &b), edit_distance(&b, &a));
        prop_assert!(edit_distance(&a, &c) <= edit_distance(&a, &b) + edit_distance(&b, &c));
        prop_assert_eq!(edit_distance(&a, &b) == 0, a == b);
    }

    #[test]
    fn tokenizations_are_contiguous(input in "[a-zTDNRMH]{0,10}") {
        let t = table();
        let lattice = build_lattice(&t, &input);
        for arc in lattice.arcs() {
            prop_assert!(arc.start < arc.end && arc.end <= lattice.input().len());
            let code = &lattice.input()[arc.start..arc.end];
            prop_assert!(t.lookup_by_code(code).contains(&arc.entry));
        }
        let paths = enumerate_paths(&lattice, 64);
        for p in &paths {
            prop_assert!(p.is_contiguous(lattice.input().len()));
            prop_assert_eq!(p.codes(lattice.input()).concat(), lattice.input());
        }
        if let Ok(g) = greedy_tokenize(&t, &input) {
            prop_assert!(g.is_contiguous(lattice.input().len()));
            let all = enumerate_paths(&lattice, usize::MAX);
            prop_assert!(all.contains(&g));
        }
    }

    #[test]
    fn normalize_key_is_idempotent(input in "[a-z]{1,10}") {
        let t = table();
        if let Ok(key) = normalize_key(&t, &input) {
            prop_assert_eq!(normalize_key(&t, &key).unwrap(), key.clone());
            let entries = greedy_tokenize(&t, &input).unwrap().entries();
            prop_assert_eq!(normalize_key(&t, &class_string(entries)).unwrap(), key);
        }
    }

    #[test]
    fn compose_output_is_well_formed(idx in proptest::collection::vec(0usize..46, 0..8)) {
        let t = table();
        let seq: Vec<&PhonemeEntry> = idx.iter().map(|&i| t.entry(i)).collect();
        match compose(&seq) {
            Err(_) => prop_assert!(seq[0].is_diacritic()),
            Ok(word) => {
                let chars: Vec<char> = word.chars().collect();
                let is_matra = |c: char| t.vowel_for_matra(c).is_some();
                if let Some(&first) = chars.first() {
                    prop_assert!(!is_matra(first));
                }
                for w in chars.windows(2) {
                    prop_assert!(!(is_matra(w[0]) && is_matra(w[1])));
                }
                for c in &chars {
                    prop_assert!(
                        t.lookup_by_char(*c).is_some() || is_matra(*c) || *c == table::VIRAMA
                    );
                }
            }
        }
    }

    #[test]
    fn responses_are_order_invariant(mut rows in proptest::collection::vec(("[a-c]", "[a-d]{0,4}"), 1..12)) {
        let scheme = SchemeEncoding::new(
            "s",
            ["a", "b", "c"].iter().map(|c| (c.to_string(), "ab".to_string())).collect(),
        );
        let build = |rows: &[(String, String)]| {
            let mut r = SubjectResponses::new();
            for (i, (c, typed)) in rows.iter().enumerate() {
                r.insert(c.clone(), format!("s{i:02}"), typed.clone());
            }
            r
        };
        let forward = build(&rows);
        let freqs = CharFrequencies::uniform(forward.char_ids().map(str::to_string).collect::<Vec<_>>()).unwrap();
        let a = compare_schemes(&forward, std::slice::from_ref(&scheme), &freqs).unwrap();
        rows.reverse();
        // subject ids follow row order, so reversing rows relabels every subject
        let backward = build(&rows);
        let b = compare_schemes(&backward, std::slice::from_ref(&scheme), &freqs).unwrap();
        prop_assert_eq!(a, b);
    }
}
