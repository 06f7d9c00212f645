//! Exact rational generating functions.

use treepat::ratfun::{Polynomial, RationalGf};

fn main() -> treepat::error::Result<()> {
    let x = RationalGf::x();
    let one = RationalGf::one();
    // Fibonacci: x / (1 - x - x^2)
    let fib = x.checked_div(&(&(&one - &x) - &(&x * &x)))?;
    println!("F(x) = {fib}");
    println!(
        "terms: {:?}",
        fib.series(12)?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    println!("growth rate: {}", fib.growth_rate()?);

    // common factors cancel on construction
    let g = RationalGf::new(
        Polynomial::from_i64(&[0, 1, -1]),
        Polynomial::from_i64(&[1, -3, 2]),
    )?;
    println!("\n(x - x^2)/(1 - 3x + 2x^2) = {g}");

    let sum = &fib + &g;
    println!("sum = {sum}");
    println!("as JSON: {}", sum.to_json());
    Ok(())
}
