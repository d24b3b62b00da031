//! Tabulated automorphism groups with primes substituted.
//!
//! cargo run --example tables -- 7 3

use p2q2::autom::predicted;
use p2q2::catalog::{admissible, type_info, GroupSpec};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = (args.first().copied().unwrap_or(7), args.get(1).copied().unwrap_or(3));
    println!("pq = 6:");
    for t in 1..=14 {
        let (e, o) = predicted(&GroupSpec::new(t, 3, 2).unwrap()).unwrap();
        println!("  {t:>2} {:<28} {e} ({o})", type_info(t).unwrap().structure);
    }
    println!("p = {p}, q = {q}:");
    for t in 15..=36 {
        let info = type_info(t).unwrap();
        match admissible(t, p, q).expect("primes").reason() {
            None => {
                let (e, o) = predicted(&GroupSpec::new(t, p, q).unwrap()).unwrap();
                println!("  {t:>2} {:<28} {e} ({o})", info.structure);
            }
            Some(r) => println!("  {t:>2} {:<28} n/a ({r})", info.structure),
        }
    }
}
