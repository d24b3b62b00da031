//! Verify every admissible group with p <= PMAX and q <= QMAX.
//!
//! cargo run --release --example verify_sweep -- 7 3

use std::env;

use p2q2::autom::{verify, VerifyOptions};
use p2q2::catalog::enumerate_admissible;

fn main() {
    let args: Vec<u64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (pmax, qmax) = (args.first().copied().unwrap_or(5), args.get(1).copied().unwrap_or(3));
    let opts = VerifyOptions::default();
    println!("{:<18} {:>6} {:>10} {:>10} {:>8}  verdict", "spec", "|G|", "predicted", "oracle", "ms");
    for spec in enumerate_admissible(pmax, qmax) {
        let r = verify(&spec, &opts);
        let (oracle, ms) = r
            .brute
            .as_ref()
            .map(|b| (b.order.to_string(), b.elapsed_ms.to_string()))
            .unwrap_or(("-".into(), "-".into()));
        println!(
            "{:<18} {:>6} {:>10} {:>10} {:>8}  {:?}{}",
            spec.to_string(),
            r.group_order,
            r.predicted.order,
            oracle,
            ms,
            r.verdict,
            r.verdict_reason.map(|s| format!(" ({s})")).unwrap_or_default()
        );
    }
}
