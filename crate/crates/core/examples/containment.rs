//! Contiguous versus non-contiguous containment.

use treepat::matcher::{contains, Matcher, Mode};
use treepat::tree::{enumerate_trees, Tree};

fn main() -> treepat::error::Result<()> {
    let comb = Tree::left_comb(4);
    for host in [
        "((L ((L L) L)) L)",
        "((L (L L)) ((L L) L))",
        "((((L L) L) L) L)",
    ] {
        let h: Tree = host.parse()?;
        println!(
            "{host:28} contiguous: {:5}  non-contiguous: {}",
            contains(&h, &comb, Mode::Contiguous),
            contains(&h, &comb, Mode::Noncontiguous)
        );
    }

    // one pass over the host answers every pattern in the set
    let patterns = enumerate_trees(4)?;
    let m = Matcher::new(&patterns)?;
    let host: Tree = "((L (L L)) ((L L) (L L)))".parse()?;
    println!("\npatterns of 4 leaves inside {host}:");
    for (p, hit) in patterns
        .iter()
        .zip(m.containment(&host, Mode::Noncontiguous))
    {
        println!("  {p:16} {}", if hit { "yes" } else { "no" });
    }
    Ok(())
}
