use std::fmt;

use crate::error::{Error, Result};
use crate::matcher::contains_noncontiguous;
use crate::tree::Tree;

/// A nonempty, deduplicated, canonically ordered set of tree patterns.
///
/// By default the set is also minimal: any element containing another element
/// is dropped, since avoiding the smaller pattern already avoids the larger.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    trees: Vec<Tree>,
}

impl PatternSet {
    /// Canonical minimized set.
    pub fn new(trees: Vec<Tree>) -> Result<PatternSet> {
        canonical_set(trees, true)
    }

    pub fn single(t: Tree) -> PatternSet {
        PatternSet { trees: vec![t] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn total_leaves(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn contains_tree(&self, t: &Tree) -> bool {
        self.trees.binary_search(t).is_ok()
    }

    /// Mirror every pattern. Minimality is preserved by symmetry.
    pub fn reflect(&self) -> PatternSet {
        let mut trees: Vec<Tree> = self.trees.iter().map(Tree::reflect).collect();
        trees.sort();
        PatternSet { trees }
    }

    pub fn literals(&self) -> Vec<String> {
        self.trees.iter().map(Tree::render).collect()
    }
}

/// Deduplicate and sort `trees`; with `minimize`, drop every element that
/// non-contiguously contains a different element.
pub fn canonical_set(mut trees: Vec<Tree>, minimize: bool) -> Result<PatternSet> {
    if trees.is_empty() {
        return Err(Error::EmptyPatternSet);
    }
    trees.sort();
    trees.dedup();
    if minimize && trees.len() > 1 {
        let keep: Vec<bool> = trees
            .iter()
            .map(|big| {
                !trees
                    .iter()
                    .any(|small| small != big && contains_noncontiguous(big, small))
            })
            .collect();
        trees = trees
            .into_iter()
            .zip(keep)
            .filter_map(|(t, k)| k.then_some(t))
            .collect();
    }
    Ok(PatternSet { trees })
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for PatternSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.literals().serialize(s)
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup() {
        let t = Tree::left_comb(4);
        assert_eq!(
            PatternSet::new(vec![t.clone(), t.clone()]).unwrap().trees(),
            &[t]
        );
    }

    #[test]
    fn minimization() {
        let set = PatternSet::new(vec![Tree::left_comb(4), Tree::left_comb(3)]).unwrap();
        assert_eq!(set.trees(), &[Tree::left_comb(3)]);
        let raw = canonical_set(vec![Tree::left_comb(4), Tree::left_comb(3)], false).unwrap();
        assert_eq!(raw.len(), 2);
        let both = PatternSet::new(vec![Tree::right_comb(4), Tree::left_comb(4)]).unwrap();
        assert_eq!(both.trees(), &[Tree::left_comb(4), Tree::right_comb(4)]);
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(
            PatternSet::new(vec![]),
            Err(Error::EmptyPatternSet)
        ));
    }

    #[test]
    fn reflection_sorted() {
        let set = PatternSet::new(vec![Tree::left_comb(3), Tree::right_comb(5)]).unwrap();
        let r = set.reflect();
        assert_eq!(r.trees(), &[Tree::right_comb(3), Tree::left_comb(5)]);
        assert_eq!(r.reflect(), set);
    }
}
