//! Prints verification reports: `cargo run --example verify_report -- 37 5 61 19`.

use std::path::Path;

use brandt_zeta::arithmetic::modpoly::DEFAULT_DATA_DIR;
use brandt_zeta::correspondence::verify_theorems;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    for pair in args.chunks(2) {
        let [n, p] = pair else { break };
        match verify_theorems(*n, *p, Path::new(DEFAULT_DATA_DIR)) {
            Ok(r) => print!("{}", r.to_text()),
            Err(e) => println!("N = {n}, p = {p}: {e}"),
        }
    }
}
