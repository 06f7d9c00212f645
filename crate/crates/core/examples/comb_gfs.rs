//! Every k-leaf pattern has the same avoidance generating function.

use treepat::gf::{gf_closed_form, gf_single};
use treepat::tree::enumerate_trees;

fn main() -> treepat::error::Result<()> {
    println!("k  gf                                          growth   first terms");
    for k in 2..=9 {
        let g = gf_closed_form(k);
        let terms: Vec<String> = g.series(8)?[1..].iter().map(|c| c.to_string()).collect();
        let growth = g
            .growth_rate()
            .map(|r| format!("{r:.4}"))
            .unwrap_or_else(|_| "-".into());
        println!(
            "{k}  {:42}  {growth:7}  {}",
            g.to_string(),
            terms.join(", ")
        );
    }

    for k in 1..=7 {
        let trees = enumerate_trees(k)?;
        let g = gf_closed_form(k);
        let same = trees.iter().all(|t| gf_single(t) == g);
        println!("k = {k}: {} patterns, all equal: {same}", trees.len());
    }
    Ok(())
}
