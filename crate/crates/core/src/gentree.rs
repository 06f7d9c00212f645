//! Parent and descendant trees, and the generating tree for comb avoidance.
//!
//! The parent of a tree deletes the rightmost leaf whose sibling is also a
//! leaf. Reversing that, a tree's descendants attach a cherry to one of the
//! leaves lying to the right (in left-to-right order) of every closed vertex,
//! where a closed vertex is an internal vertex whose right child is internal.
//!
//! Restricted to avoiders of the `k`-leaf left comb, labelling each tree by
//! its number of avoiding descendants gives a generating tree on the labels
//! `1..=k-2` with the succession rule
//!
//! ```text
//! (i)     -> (2) (3) ... (i+1)            for i < k-2
//! (k-2)   -> (2) (3) ... (k-2) (k-2)
//! ```
//!
//! which [`GenTreeTable`] unrolls level by level.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gf::binomial;
use crate::tree::Tree;

/// Remove the rightmost cherry's two leaves.
pub fn parent_tree(t: &Tree) -> Result<Tree> {
    strip_rightmost_cherry(t).ok_or(Error::NoParent)
}

fn strip_rightmost_cherry(t: &Tree) -> Option<Tree> {
    let (l, r) = t.children()?;
    if l.is_leaf() && r.is_leaf() {
        return Some(Tree::Leaf);
    }
    if let Some(r2) = strip_rightmost_cherry(r) {
        return Some(Tree::node(l.clone(), r2));
    }
    strip_rightmost_cherry(l).map(|l2| Tree::node(l2, r.clone()))
}

/// Index (from the left, 0-based) of the first leaf lying to the right of
/// every closed vertex.
fn first_eligible_leaf(t: &Tree) -> usize {
    fn walk(t: &Tree, seen: &mut usize, first: &mut usize) {
        match t.children() {
            None => *seen += 1,
            Some((l, r)) => {
                walk(l, seen, first);
                if !r.is_leaf() {
                    *first = *seen;
                }
                walk(r, seen, first);
            }
        }
    }
    let (mut seen, mut first) = (0, 0);
    walk(t, &mut seen, &mut first);
    first
}

/// Number of descendant trees.
pub fn descendant_count(t: &Tree) -> usize {
    t.leaf_count() - first_eligible_leaf(t)
}

fn grow_leaf(t: &Tree, index: usize) -> Tree {
    match t.children() {
        None => Tree::cherry(),
        Some((l, r)) => {
            let nl = l.leaf_count();
            if index < nl {
                Tree::node(grow_leaf(l, index), r.clone())
            } else {
                Tree::node(l.clone(), grow_leaf(r, index - nl))
            }
        }
    }
}

/// Descendant trees, ordered by the position of the grown leaf, left to right.
pub fn descendant_trees(t: &Tree) -> Vec<Tree> {
    (first_eligible_leaf(t)..t.leaf_count())
        .map(|i| grow_leaf(t, i))
        .collect()
}

/// `[Leaf, ..., t]`, each tree the parent of the next.
pub fn ancestry(t: &Tree) -> Vec<Tree> {
    let mut chain = vec![t.clone()];
    while let Ok(p) = parent_tree(chain.last().unwrap()) {
        chain.push(p);
    }
    chain.reverse();
    chain
}

/// `a_{n,i}`: avoiders of the `k`-leaf left comb with `n` leaves and exactly
/// `i` avoiding descendants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTreeTable {
    k: usize,
    // rows[n - 1][i - 1] = a_{n,i}
    rows: Vec<Vec<BigInt>>,
}

impl GenTreeTable {
    pub fn build(k: usize, nmax: usize) -> Result<GenTreeTable> {
        if k < 3 {
            return Err(Error::CombTooSmall { min: 3, got: k });
        }
        let labels = k - 2;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax);
        if nmax == 0 {
            return Ok(GenTreeTable { k, rows });
        }
        let mut first = vec![BigInt::zero(); labels];
        first[0] = BigInt::from(1);
        rows.push(first);
        for _ in 1..nmax {
            let prev = rows.last().unwrap();
            let mut next = vec![BigInt::zero(); labels];
            if labels == 1 {
                // k = 3: every avoider is a right comb with one avoiding descendant
                next[0] = prev[0].clone();
            } else {
                for (j, count) in prev.iter().enumerate().map(|(j, c)| (j + 1, c)) {
                    if count.is_zero() {
                        continue;
                    }
                    for child in 2..=(j + 1).min(labels) {
                        next[child - 1] += count;
                    }
                    if j == labels {
                        next[labels - 1] += count;
                    }
                }
            }
            rows.push(next);
        }
        Ok(GenTreeTable { k, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `a_{n,i}`, zero outside the table.
    pub fn entry(&self, n: usize, i: usize) -> BigInt {
        n.checked_sub(1)
            .and_then(|r| self.rows.get(r))
            .and_then(|row| i.checked_sub(1).and_then(|c| row.get(c)))
            .cloned()
            .unwrap_or_default()
    }

    /// Row sums `a_1, ..., a_nmax`.
    pub fn totals(&self) -> Vec<BigInt> {
        self.rows.iter().map(|row| row.iter().sum()).collect()
    }
}

/// `a_1..=a_nmax` for the `k`-leaf left comb, via the generating tree.
pub fn comb_sequence_gentree(k: usize, nmax: usize) -> Result<Vec<BigInt>> {
    Ok(GenTreeTable::build(k, nmax)?.totals())
}

/// Coefficients `[c_1, c_2, ...]` with `a_n = c_1 a_{n-1} + c_2 a_{n-2} + ...`.
pub fn comb_recurrence_coeffs(k: usize) -> Result<Vec<BigInt>> {
    if k < 3 {
        return Err(Error::CombTooSmall { min: 3, got: k });
    }
    let k = k as u64;
    Ok((2..=k.div_ceil(2))
        .map(|i| {
            let c = binomial(k - i, i - 1);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect())
}
