//! Look a sequence up in the bundled OEIS cache, and online when enabled.
//!
//!     TREEPAT_OEIS_URL=off cargo run --example oeis_lookup -- 1 1 2 5 13 34 89

use num_bigint::BigInt;
use treepat::oeis::OeisClient;

fn main() {
    let mut seq: Vec<BigInt> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer terms"))
        .collect();
    if seq.is_empty() {
        seq = [1, 1, 2, 4, 7, 13, 24, 44, 81]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
    }
    let (client, warnings) = OeisClient::from_env();
    for w in warnings {
        eprintln!("warning: {w}");
    }
    let result = client.annotate(&seq);
    for w in &result.warnings {
        eprintln!("warning: {w}");
    }
    if result.ids.is_empty() {
        println!("no matches");
    }
    for id in &result.ids {
        let name = client
            .cache()
            .entries()
            .iter()
            .find(|e| &e.id == id)
            .map(|e| e.name.as_str())
            .unwrap_or("");
        println!("{id} {name}");
    }
}
