//! Tree literals, the canonical order and t{k}_{j} indices.

use treepat::tree::{catalan, enumerate_trees, Tree, TreeIndex};

fn main() -> treepat::error::Result<()> {
    let t: Tree = "((L (L L)) (L L))".parse()?;
    println!(
        "{t}: {} leaves, index {}",
        t.leaf_count(),
        t.canonical_index()?
    );
    println!("reflection: {}", t.reflect());

    for k in 1..=4 {
        println!("\n{} trees with {k} leaves", catalan(k - 1).unwrap());
        for (j, tree) in enumerate_trees(k)?.iter().enumerate() {
            println!("  {}  {tree}", TreeIndex::new(k, j as u128 + 1));
        }
    }

    // ranks are computed without enumerating
    let big = Tree::right_comb(40);
    let ix = big.canonical_index()?;
    println!("\nright comb with 40 leaves is {ix}");
    assert_eq!(Tree::from_index(ix)?, big);

    if let Err(e) = Tree::parse("((L L) L") {
        println!("parse error: {e}");
    }
    Ok(())
}
