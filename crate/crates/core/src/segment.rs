//! Segmentation of roman input into phoneme codes.
//!
//! [`build_lattice`] records every code match (canonical, alternate and
//! lexicon-only) so that lexicon lookup can try alternate spellings.
//! [`greedy_tokenize`] is the deterministic maximal-munch path used for
//! direct mapping; it ignores lexicon-only codes.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::table::{CharacterTable, CodeKind, PhonemeEntry};

/// Default cap on enumerated lattice paths.
pub const DEFAULT_PATH_LIMIT: usize = 64;

/// `input[start..end]` spells `entry` (byte offsets).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeArc<'t> {
    pub start: usize,
    pub end: usize,
    pub entry: &'t PhonemeEntry,
    pub kind: CodeKind,
}

impl LatticeArc<'_> {
    fn sort_key(&self) -> (usize, usize, usize) {
        (self.start, self.end, self.entry.ordinal())
    }
}

#[derive(Debug, Clone)]
pub struct TokenLattice<'t> {
    input: String,
    arcs: Vec<LatticeArc<'t>>,
    /// Indices into `arcs`, grouped by start offset.
    outgoing: Vec<Vec<usize>>,
}

impl<'t> TokenLattice<'t> {
    /// The case-folded input the arcs index into.
    pub fn input(&self) -> &str {
        &self.input
    }

    /// Arcs ordered by start, end, then table order.
    pub fn arcs(&self) -> &[LatticeArc<'t>] {
        &self.arcs
    }

    pub fn arcs_from(&self, start: usize) -> impl Iterator<Item = &LatticeArc<'t>> {
        self.outgoing
            .get(start)
            .into_iter()
            .flatten()
            .map(move |&i| &self.arcs[i])
    }

    /// Number of complete paths, saturating at `u128::MAX`.
    pub fn count_paths(&self) -> u128 {
        let n = self.input.len();
        let mut ways = vec![0u128; n + 1];
        ways[n] = 1;
        for pos in (0..n).rev() {
            ways[pos] = self
                .arcs_from(pos)
                .fold(0u128, |acc, a| acc.saturating_add(ways[a.end]));
        }
        ways[0]
    }

    /// Fewest arcs needed to reach the end of input from each offset.
    fn arcs_to_end(&self) -> Vec<Option<usize>> {
        let n = self.input.len();
        let mut best = vec![None; n + 1];
        best[n] = Some(0);
        for pos in (0..n).rev() {
            best[pos] = self
                .arcs_from(pos)
                .filter_map(|a| best[a.end].map(|d| d + 1))
                .min();
        }
        best
    }
}

/// A contiguous path through the lattice covering the whole input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tokenization<'t> {
    pub path: Vec<LatticeArc<'t>>,
}

impl<'t> Tokenization<'t> {
    pub fn entries(&self) -> Vec<&'t PhonemeEntry> {
        self.path.iter().map(|a| a.entry).collect()
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// True when arcs are contiguous from 0 to `input_len`.
    pub fn is_contiguous(&self, input_len: usize) -> bool {
        let mut pos = 0;
        for arc in &self.path {
            if arc.start != pos || arc.end <= arc.start {
                return false;
            }
            pos = arc.end;
        }
        pos == input_len
    }

    /// Substrings of `input` spanned by each arc.
    pub fn codes<'a>(&self, input: &'a str) -> Vec<&'a str> {
        self.path.iter().map(|a| &input[a.start..a.end]).collect()
    }
}

/// Every code match over the case-folded input.
pub fn build_lattice<'t>(table: &'t CharacterTable, input: &str) -> TokenLattice<'t> {
    let input = table.fold_case(input);
    let bytes = input.as_bytes();
    let n = bytes.len();
    let mut arcs = Vec::new();
    for start in (0..n).filter(|&i| input.is_char_boundary(i)) {
        for end in start + 1..=(start + table.max_code_len()).min(n) {
            if !input.is_char_boundary(end) {
                continue;
            }
            for m in table.code_matches(&input[start..end]) {
                arcs.push(LatticeArc {
                    start,
                    end,
                    entry: table.entry(m.entry),
                    kind: m.kind,
                });
            }
        }
    }
    arcs.sort_by_key(LatticeArc::sort_key);
    let mut outgoing = vec![Vec::new(); n + 1];
    for (i, a) in arcs.iter().enumerate() {
        outgoing[a.start].push(i);
    }
    TokenLattice {
        input,
        arcs,
        outgoing,
    }
}

/// Maximal munch over typeable codes: longest match first, canonical before
/// alternate, then table order.
pub fn greedy_tokenize<'t>(table: &'t CharacterTable, input: &str) -> Result<Tokenization<'t>> {
    let folded = table.fold_case(input);
    let n = folded.len();
    let mut path = Vec::new();
    let mut pos = 0;
    while pos < n {
        let longest = (pos + table.max_code_len()).min(n);
        let arc = (pos + 1..=longest)
            .rev()
            .filter(|&end| folded.is_char_boundary(end))
            .find_map(|end| {
                let matches = table.code_matches(&folded[pos..end]);
                matches
                    .iter()
                    .filter(|m| m.kind.is_typeable())
                    .min_by_key(|m| (m.kind, m.entry))
                    .map(|m| LatticeArc {
                        start: pos,
                        end,
                        entry: table.entry(m.entry),
                        kind: m.kind,
                    })
            })
            .ok_or_else(|| Error::NoSegmentation {
                input: input.to_string(),
                position: pos,
            })?;
        pos = arc.end;
        path.push(arc);
    }
    Ok(Tokenization { path })
}

#[derive(PartialEq, Eq)]
struct Partial {
    bound: usize,
    key: Vec<(usize, usize)>,
    arcs: Vec<usize>,
    pos: usize,
}

impl Ord for Partial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.bound, &self.key).cmp(&(other.bound, &other.key))
    }
}

impl PartialOrd for Partial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Up to `limit` complete paths, fewest arcs first; paths with equal arc
/// counts are ordered by their arcs' (end, table order) sequence.
///
/// Best-first search with the exact remaining-arc count as bound, so paths
/// come out in order without enumerating the whole lattice.
pub fn enumerate_paths<'t>(lattice: &TokenLattice<'t>, limit: usize) -> Vec<Tokenization<'t>> {
    let n = lattice.input.len();
    let to_end = lattice.arcs_to_end();
    let mut out = Vec::new();
    let Some(min_total) = to_end[0] else {
        return out;
    };
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(Partial {
        bound: min_total,
        key: Vec::new(),
        arcs: Vec::new(),
        pos: 0,
    }));
    while let Some(Reverse(node)) = heap.pop() {
        if out.len() >= limit {
            break;
        }
        if node.pos == n {
            out.push(Tokenization {
                path: node.arcs.iter().map(|&i| lattice.arcs[i]).collect(),
            });
            continue;
        }
        for &i in &lattice.outgoing[node.pos] {
            let arc = &lattice.arcs[i];
            let Some(rest) = to_end[arc.end] else {
                continue;
            };
            let mut key = node.key.clone();
            key.push((arc.end, arc.entry.ordinal()));
            let mut arcs = node.arcs.clone();
            arcs.push(i);
            heap.push(Reverse(Partial {
                bound: arcs.len() + rest,
                key,
                arcs,
                pos: arc.end,
            }));
        }
    }
    out
}
