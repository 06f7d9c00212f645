//! Trees as 231-avoiding permutations, and avoidance counts on both sides.

use treepat::matcher::Mode;
use treepat::oracle::count_avoiders;
use treepat::pattern_set::PatternSet;
use treepat::perm::{count_avoiding_perms, perm_to_tree, tree_to_perm, Permutation};
use treepat::tree::{enumerate_trees, Tree};

fn main() -> treepat::error::Result<()> {
    for t in enumerate_trees(4)? {
        let p = tree_to_perm(&t);
        println!("{t:16} <-> {p}");
        assert_eq!(perm_to_tree(&p)?, t);
    }

    let p231: Permutation = "231".parse()?;
    for k in 3..=5 {
        let trees = PatternSet::single(Tree::left_comb(k));
        let perms = [p231.clone(), Permutation::decreasing(k - 1)];
        let a: Vec<u64> = (1..=9)
            .map(|n| count_avoiders(n, &trees, Mode::Noncontiguous))
            .collect::<Result<_, _>>()?;
        let b: Vec<u64> = (1..=9)
            .map(|n| count_avoiding_perms(n - 1, &perms))
            .collect();
        println!("k = {k}: trees {a:?}\n       perms {b:?}");
    }
    Ok(())
}
