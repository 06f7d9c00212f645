//! Permutations, classical pattern containment, and the bijection between
//! `n`-leaf trees and 231-avoiding permutations of length `n - 1`.
//!
//! The bijection labels internal vertices: the root takes the largest label,
//! the left subtree's internal vertices take the smallest labels, the right
//! subtree's the labels in between, recursively. Reading labels in
//! left-to-right (in-order) position gives the permutation.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A rearrangement of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Permutation> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in &entries {
            if e == 0 || e > n || std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::InvalidPermutation { len: n, entries });
            }
        }
        Ok(Permutation(entries))
    }

    pub fn empty() -> Permutation {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Permutation {
        Permutation((1..=n).rev().collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every permutation of length `n`, lexicographically.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        extend_all(n, &mut prefix, &mut used, &mut |p| {
            out.push(Permutation(p.to_vec()))
        });
        out
    }
}

fn extend_all(
    n: usize,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    if prefix.len() == n {
        emit(prefix);
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            prefix.push(v);
            extend_all(n, prefix, used, emit);
            prefix.pop();
            used[v] = false;
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits without separators (`"24135"`), or comma-separated entries.
    /// The empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let bad = || Error::PermutationSyntax(s.to_string());
        let entries: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

pub fn tree_to_perm(t: &Tree) -> Permutation {
    fn label(t: &Tree, offset: usize, out: &mut Vec<usize>) {
        if let Some((l, r)) = t.children() {
            let left_internal = l.internal_count();
            label(l, offset, out);
            out.push(offset + t.internal_count());
            label(r, offset + left_internal, out);
        }
    }
    let mut out = Vec::with_capacity(t.internal_count());
    label(t, 0, &mut out);
    Permutation(out)
}

/// Inverse of [`tree_to_perm`]; fails on permutations containing 231.
pub fn perm_to_tree(p: &Permutation) -> Result<Tree> {
    // values in `entries` are exactly offset+1 ..= offset+len
    fn build(entries: &[usize], offset: usize) -> Option<Tree> {
        if entries.is_empty() {
            return Some(Tree::Leaf);
        }
        let top = offset + entries.len();
        let pos = entries.iter().position(|&v| v == top)?;
        let (left, right) = (&entries[..pos], &entries[pos + 1..]);
        if left.iter().any(|&v| v > offset + pos) {
            return None;
        }
        Some(Tree::node(
            build(left, offset)?,
            build(right, offset + pos)?,
        ))
    }
    build(&p.0, 0).ok_or_else(|| Error::Contains231(p.to_string()))
}

/// Classical containment of `pattern` in `p`.
pub fn perm_contains(p: &Permutation, pattern: &Permutation) -> bool {
    contains_slice(&p.0, &pattern.0)
}

fn contains_slice(p: &[usize], q: &[usize]) -> bool {
    fn search(p: &[usize], q: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
        let m = chosen.len();
        if m == q.len() {
            return true;
        }
        if p.len() - start < q.len() - m {
            return false;
        }
        for i in start..p.len() {
            if consistent(p, q, chosen, i) {
                chosen.push(i);
                if search(p, q, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    search(p, q, &mut Vec::with_capacity(q.len()), 0)
}

fn consistent(p: &[usize], q: &[usize], chosen: &[usize], next: usize) -> bool {
    let m = chosen.len();
    chosen
        .iter()
        .enumerate()
        .all(|(a, &i)| (p[i] < p[next]) == (q[a] < q[m]))
}

/// Does `prefix` contain `q` using its last entry as the image of `q`'s last?
fn contains_ending_at_last(prefix: &[usize], q: &[usize]) -> bool {
    let Some((&last_q, init_q)) = q.split_last() else {
        return true;
    };
    let Some((&last_p, init_p)) = prefix.split_last() else {
        return false;
    };
    if init_p.len() < init_q.len() {
        return false;
    }
    fn search(
        p: &[usize],
        q: &[usize],
        lp: usize,
        lq: usize,
        chosen: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        let m = chosen.len();
        if m == q.len() {
            return true;
        }
        for i in start..p.len() {
            if (p[i] < lp) == (q[m] < lq) && consistent(p, q, chosen, i) {
                chosen.push(i);
                if search(p, q, lp, lq, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    search(init_p, init_q, last_p, last_q, &mut Vec::new(), 0)
}

pub fn avoids_all_perms(p: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|q| !perm_contains(p, q))
}

/// `s_Q(n)`: permutations of length `n` avoiding every pattern in `patterns`.
pub fn count_avoiding_perms(n: usize, patterns: &[Permutation]) -> u64 {
    let mut count = 0u64;
    visit_avoiders(n, patterns, &mut |_| count += 1);
    count
}

/// Avoiders of length `n`, lexicographically.
pub fn avoiding_perms(n: usize, patterns: &[Permutation]) -> Vec<Permutation> {
    let mut out = Vec::new();
    visit_avoiders(n, patterns, &mut |p| out.push(Permutation(p.to_vec())));
    out
}

/// Depth-first over prefixes; containment is hereditary, so a prefix that
/// contains a pattern is pruned with its whole subtree.
fn visit_avoiders(n: usize, patterns: &[Permutation], emit: &mut dyn FnMut(&[usize])) {
    fn go(
        n: usize,
        patterns: &[Permutation],
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if prefix.len() == n {
            emit(prefix);
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            prefix.push(v);
            if !patterns
                .iter()
                .any(|q| contains_ending_at_last(prefix, &q.0))
            {
                used[v] = true;
                go(n, patterns, prefix, used, emit);
                used[v] = false;
            }
            prefix.pop();
        }
    }
    if patterns.iter().any(|q| q.is_empty()) {
        return;
    }
    go(
        n,
        patterns,
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        emit,
    );
}

/// Pattern sets `{one length-3 pattern, two distinct length-4 patterns}` whose
/// avoidance counts `s_Q(1), s_Q(2), ...` reproduce `target`.
pub fn search_three_four_four(target: &[u64]) -> Vec<Vec<Permutation>> {
    let threes = Permutation::all(3);
    let fours = Permutation::all(4);
    let mut candidates = Vec::new();
    for a in &threes {
        for (i, b) in fours.iter().enumerate() {
            for c in &fours[i + 1..] {
                candidates.push(vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    let mut found: Vec<Vec<Permutation>> = candidates
        .into_par_iter()
        .filter(|q| {
            target
                .iter()
                .enumerate()
                .all(|(i, &want)| count_avoiding_perms(i + 1, q) == want)
        })
        .collect();
    found.sort();
    found
}
