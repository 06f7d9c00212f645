//! Wilf classes of incomparable pattern pairs.
//!
//!     cargo run --release --example classify_pairs -- 4 5

use treepat::classify::{incomparable_pairs, wilf_classify, PREFIX_LEN};

fn main() -> treepat::error::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("leaf counts are positive integers"))
        .collect();
    let (k1, k2) = match args[..] {
        [a, b] => (a, b),
        _ => (4, 4),
    };
    let pairs = incomparable_pairs(k1, k2)?;
    let classes = wilf_classify(&pairs, PREFIX_LEN);
    println!(
        "{} pairs of {k1}- and {k2}-leaf trees, {} classes",
        pairs.len(),
        classes.len()
    );
    for c in &classes {
        let terms: Vec<String> = c.sequence_prefix.iter().map(|a| a.to_string()).collect();
        println!("\nClass {}: {}", c.id, c.gf);
        println!("  {}", terms.join(", "));
        for m in &c.members {
            println!("  {m}");
        }
    }
    Ok(())
}
