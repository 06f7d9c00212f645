//! Parent trees, descendants, and the generating tree for comb avoiders.

use treepat::gentree::{ancestry, comb_recurrence_coeffs, descendant_trees, GenTreeTable};
use treepat::tree::Tree;

fn main() -> treepat::error::Result<()> {
    let t: Tree = "((L (L L)) (L L))".parse()?;
    println!("ancestry of {t}:");
    for a in ancestry(&t) {
        println!("  {a}");
    }
    println!("descendants:");
    for d in descendant_trees(&t) {
        println!("  {d}");
    }

    let k = 6;
    let table = GenTreeTable::build(k, 10)?;
    println!("\ncounts by label, avoiding the {k}-leaf left comb");
    for (n, row) in table.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:5}")).collect();
        println!("  n = {:2} {}", n + 1, cells.join(""));
    }
    println!(
        "totals: {:?}",
        table
            .totals()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    println!("recurrence coefficients: {:?}", comb_recurrence_coeffs(k)?);
    Ok(())
}
