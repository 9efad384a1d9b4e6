//! Character trie from phonetic keys to lexicon entry ids.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Default)]
struct Node {
    children: BTreeMap<char, usize>,
    ids: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct KeyTrie {
    nodes: Vec<Node>,
}

impl Default for KeyTrie {
    fn default() -> Self {
        KeyTrie {
            nodes: vec![Node::default()],
        }
    }
}

impl KeyTrie {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: &str, id: usize) {
        let mut node = 0;
        for ch in key.chars() {
            node = match self.nodes[node].children.get(&ch) {
                Some(&next) => next,
                None => {
                    self.nodes.push(Node::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[node].children.insert(ch, next);
                    next
                }
            };
        }
        let ids = &mut self.nodes[node].ids;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }

    fn find(&self, prefix: &str) -> Option<usize> {
        prefix
            .chars()
            .try_fold(0, |node, ch| self.nodes[node].children.get(&ch).copied())
    }

    /// Ids stored under exactly `key`.
    pub fn get(&self, key: &str) -> &[usize] {
        self.find(key).map(|n| self.nodes[n].ids.as_slice()).unwrap_or(&[])
    }

    /// Ids stored under any key starting with `prefix`, deduplicated, in key order.
    pub fn with_prefix(&self, prefix: &str) -> Vec<usize> {
        let mut out = Vec::new();
        let Some(start) = self.find(prefix) else {
            return out;
        };
        let mut stack = vec![start];
        while let Some(node) = stack.pop() {
            let n = &self.nodes[node];
            for &id in &n.ids {
                if !out.contains(&id) {
                    out.push(id);
                }
            }
            stack.extend(n.children.values().rev());
        }
        out
    }

    /// Every (key, id) pair, keys in lexicographic order.
    pub fn pairs(&self) -> Vec<(String, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![(0, String::new())];
        while let Some((node, key)) = stack.pop() {
            let n = &self.nodes[node];
            out.extend(n.ids.iter().map(|&id| (key.clone(), id)));
            for (&ch, &child) in n.children.iter().rev() {
                let mut k = key.clone();
                k.push(ch);
                stack.push((child, k));
            }
        }
        out
    }
}
