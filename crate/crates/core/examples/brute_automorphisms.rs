//! Exhaustive automorphism search with a node budget.
//!
//! cargo run --release --example brute_automorphisms -- t29:p=5,q=2 1e8

use std::time::Instant;

use p2q2::autom::{brute_aut_with, BruteOptions, DEFAULT_BUDGET};
use p2q2::catalog::{build, GroupSpec};
use p2q2::cli::parse_budget;

fn main() {
    let mut args = std::env::args().skip(1);
    let spec: GroupSpec = args.next().unwrap_or_else(|| "t19:p=5,q=2".into()).parse().expect("spec");
    let budget = args.next().map(|b| parse_budget(&b).expect("budget")).unwrap_or(DEFAULT_BUDGET);
    let g = build(&spec).expect("buildable").group;

    let start = Instant::now();
    match brute_aut_with(&g, &BruteOptions { budget, parallel: true }) {
        Ok(aut) => {
            println!("|Aut({spec})| = {} in {:?}", aut.order(), start.elapsed());
            let gens = aut.generating_set(&g);
            println!("{} generators:", gens.len());
            for a in &gens {
                let imgs: Vec<String> = a.images().iter().map(|&x| g.format_element(x as usize)).collect();
                println!("  [{}] of order {}", imgs.join(", "), a.order(&g));
            }
        }
        Err(e) => println!("{spec}: {e}"),
    }
}
