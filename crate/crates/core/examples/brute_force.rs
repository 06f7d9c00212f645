//! Brute-force counts next to the generating function's coefficients.

use treepat::gf::GfEngine;
use treepat::matcher::Mode;
use treepat::oracle::sequence_brute;
use treepat::pattern_set::PatternSet;
use treepat::tree::Tree;

fn main() -> treepat::error::Result<()> {
    let set = PatternSet::new(vec!["(((L L) L) L)".parse()?, "(L ((L L) L))".parse()?])?;
    let n = 11;
    let brute = sequence_brute(n, &set, Mode::Noncontiguous)?;
    let series = GfEngine::new().gf_set(&set).series(n)?;
    println!("avoiding {set}");
    for (i, b) in brute.iter().enumerate() {
        println!("  n = {:2}  brute {b:6}  gf {}", i + 1, series[i + 1]);
    }

    // contiguous avoidance of the 4-leaf left comb gives Motzkin numbers
    let comb = PatternSet::single(Tree::left_comb(4));
    println!(
        "\ncontiguous: {:?}",
        sequence_brute(9, &comb, Mode::Contiguous)?
    );
    Ok(())
}
