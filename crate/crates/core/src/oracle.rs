//! Ground-truth avoidance counts by exhaustive enumeration.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matcher::{Matcher, Mode};
use crate::pattern_set::PatternSet;
use crate::tree::{enumerate_up_to, Tree};

/// Number of `n`-leaf trees avoiding every pattern in `set`.
pub fn count_avoiders(n: usize, set: &PatternSet, mode: Mode) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroLeaves);
    }
    let trees = enumerate_up_to(n)?.pop().unwrap_or_default();
    Ok(count_in(&trees, &Matcher::for_set(set), mode))
}

/// `result[n - 1] = count_avoiders(n, set, mode)` for `n = 1..=nmax`.
pub fn sequence_brute(nmax: usize, set: &PatternSet, mode: Mode) -> Result<Vec<u64>> {
    let matcher = Matcher::for_set(set);
    Ok(enumerate_up_to(nmax)?
        .iter()
        .map(|trees| count_in(trees, &matcher, mode))
        .collect())
}

/// Avoiders among `trees`, in input order.
pub fn avoiders(trees: &[Tree], set: &PatternSet, mode: Mode) -> Vec<Tree> {
    let matcher = Matcher::for_set(set);
    trees
        .par_iter()
        .filter(|t| matcher.avoids(t, mode))
        .cloned()
        .collect()
}

fn count_in(trees: &[Tree], matcher: &Matcher, mode: Mode) -> u64 {
    trees.par_iter().filter(|t| matcher.avoids(t, mode)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(trees: Vec<Tree>) -> PatternSet {
        PatternSet::new(trees).unwrap()
    }

    #[test]
    fn counts() {
        let c3 = set(vec![Tree::left_comb(3)]);
        assert_eq!(count_avoiders(6, &c3, Mode::Noncontiguous).unwrap(), 1);
        let c4 = set(vec![Tree::left_comb(4)]);
        assert_eq!(count_avoiders(7, &c4, Mode::Noncontiguous).unwrap(), 32);
        assert_eq!(count_avoiders(5, &c4, Mode::Contiguous).unwrap(), 9);
        assert!(matches!(
            count_avoiders(0, &c4, Mode::Contiguous),
            Err(Error::ZeroLeaves)
        ));
    }

    #[test]
    fn sequences() {
        let c5 = set(vec![Tree::left_comb(5)]);
        assert_eq!(
            sequence_brute(8, &c5, Mode::Noncontiguous).unwrap(),
            [1, 1, 2, 5, 13, 34, 89, 233]
        );
        let fib = set(vec![
            Tree::left_comb(4),
            Tree::parse("((L (L L)) L)").unwrap(),
        ]);
        assert_eq!(
            sequence_brute(8, &fib, Mode::Noncontiguous).unwrap(),
            [1, 1, 2, 3, 5, 8, 13, 21]
        );
        let c2 = set(vec![Tree::cherry()]);
        assert_eq!(
            sequence_brute(4, &c2, Mode::Noncontiguous).unwrap(),
            [1, 0, 0, 0]
        );
    }

    #[test]
    fn contiguous_avoiders_are_a_superset() {
        for k in 1..=5 {
            for t in crate::tree::enumerate_trees(k).unwrap() {
                let s = PatternSet::single(t.clone());
                let con = sequence_brute(9, &s, Mode::Contiguous).unwrap();
                let non = sequence_brute(9, &s, Mode::Noncontiguous).unwrap();
                assert!(con.iter().zip(&non).all(|(c, n)| c >= n), "{t}");
                let r = PatternSet::single(t.reflect());
                assert_eq!(sequence_brute(9, &r, Mode::Noncontiguous).unwrap(), non);
            }
        }
    }
}
