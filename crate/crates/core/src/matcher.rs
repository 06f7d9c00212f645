//! Contiguous and non-contiguous containment of tree patterns.
//!
//! Non-contiguous containment uses the recursive embedding rule: a pattern
//! `t` occurs in a host `T` when `t` is a leaf, or when `T` is internal and
//! either both of `t`'s subtrees occur in the matching subtrees of `T`, or `t`
//! occurs entirely inside one of `T`'s subtrees.
//!
//! [`Matcher`] evaluates that rule bottom-up for a whole set of patterns at
//! once: every distinct pattern subtree gets one bit, and each host vertex
//! computes the bits of the pattern subtrees it contains from its children.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pattern_set::PatternSet;
use crate::tree::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Contiguous,
    Noncontiguous,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Mode, String> {
        match s {
            "contiguous" => Ok(Mode::Contiguous),
            "noncontiguous" | "non-contiguous" => Ok(Mode::Noncontiguous),
            other => Err(format!("unknown containment mode {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum PatternNode {
    Leaf,
    Node(usize, usize),
}

/// A set of patterns flattened into hash-consed nodes, children first.
#[derive(Clone, Debug)]
pub struct Matcher {
    nodes: Vec<PatternNode>,
    roots: Vec<usize>,
    words: usize,
}

type Bits = Vec<u64>;

fn get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

impl Matcher {
    pub fn new(patterns: &[Tree]) -> Result<Matcher> {
        if patterns.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        let mut nodes = Vec::new();
        let mut ids = HashMap::new();
        let roots = patterns
            .iter()
            .map(|p| intern(p, &mut nodes, &mut ids))
            .collect();
        let words = nodes.len().div_ceil(64);
        Ok(Matcher {
            nodes,
            roots,
            words,
        })
    }

    pub fn for_set(set: &PatternSet) -> Matcher {
        Matcher::new(set.trees()).expect("pattern sets are nonempty")
    }

    /// Containment flags for each pattern, in the order given to [`Matcher::new`].
    pub fn containment(&self, host: &Tree, mode: Mode) -> Vec<bool> {
        let bits = match mode {
            Mode::Noncontiguous => self.noncontiguous(host),
            Mode::Contiguous => self.contiguous(host).1,
        };
        self.roots.iter().map(|&r| get(&bits, r)).collect()
    }

    pub fn contains_any(&self, host: &Tree, mode: Mode) -> bool {
        let bits = match mode {
            Mode::Noncontiguous => self.noncontiguous(host),
            Mode::Contiguous => self.contiguous(host).1,
        };
        self.roots.iter().any(|&r| get(&bits, r))
    }

    pub fn avoids(&self, host: &Tree, mode: Mode) -> bool {
        !self.contains_any(host, mode)
    }

    fn empty(&self) -> Bits {
        vec![0; self.words]
    }

    fn leaf_bits(&self) -> Bits {
        let mut bits = self.empty();
        for (i, n) in self.nodes.iter().enumerate() {
            if let PatternNode::Leaf = n {
                set(&mut bits, i);
            }
        }
        bits
    }

    fn noncontiguous(&self, host: &Tree) -> Bits {
        let Some((hl, hr)) = host.children() else {
            return self.leaf_bits();
        };
        let left = self.noncontiguous(hl);
        let right = self.noncontiguous(hr);
        let mut bits: Bits = left.iter().zip(&right).map(|(a, b)| a | b).collect();
        for (i, n) in self.nodes.iter().enumerate() {
            if let PatternNode::Node(pl, pr) = *n {
                if get(&left, pl) && get(&right, pr) {
                    set(&mut bits, i);
                }
            }
        }
        bits
    }

    /// Returns (matches rooted exactly at `host`, matches anywhere in `host`).
    fn contiguous(&self, host: &Tree) -> (Bits, Bits) {
        let Some((hl, hr)) = host.children() else {
            let leaves = self.leaf_bits();
            return (leaves.clone(), leaves);
        };
        let (left_root, left_any) = self.contiguous(hl);
        let (right_root, right_any) = self.contiguous(hr);
        let mut root = self.empty();
        for (i, n) in self.nodes.iter().enumerate() {
            let hit = match *n {
                PatternNode::Leaf => true,
                PatternNode::Node(pl, pr) => get(&left_root, pl) && get(&right_root, pr),
            };
            if hit {
                set(&mut root, i);
            }
        }
        let any = root
            .iter()
            .zip(left_any.iter().zip(&right_any))
            .map(|(r, (a, b))| r | a | b)
            .collect();
        (root, any)
    }
}

fn intern(t: &Tree, nodes: &mut Vec<PatternNode>, ids: &mut HashMap<Tree, usize>) -> usize {
    if let Some(&id) = ids.get(t) {
        return id;
    }
    let node = match t.children() {
        None => PatternNode::Leaf,
        Some((l, r)) => PatternNode::Node(intern(l, nodes, ids), intern(r, nodes, ids)),
    };
    nodes.push(node);
    ids.insert(t.clone(), nodes.len() - 1);
    nodes.len() - 1
}

pub fn contains_noncontiguous(host: &Tree, pattern: &Tree) -> bool {
    contains(host, pattern, Mode::Noncontiguous)
}

pub fn contains_contiguous(host: &Tree, pattern: &Tree) -> bool {
    contains(host, pattern, Mode::Contiguous)
}

pub fn contains(host: &Tree, pattern: &Tree, mode: Mode) -> bool {
    Matcher::new(std::slice::from_ref(pattern))
        .expect("one pattern")
        .contains_any(host, mode)
}

/// True when `host` contains no element of `patterns` in the given mode.
pub fn avoids_all(host: &Tree, patterns: &PatternSet, mode: Mode) -> bool {
    Matcher::for_set(patterns).avoids(host, mode)
}
