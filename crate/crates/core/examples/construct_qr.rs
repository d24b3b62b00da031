//! Explicit Q ⋊ R decomposition compared with the exhaustive search.
//!
//! cargo run --release --example construct_qr -- t36:p=5,q=3

use p2q2::autom::{brute_aut, check_main_theorem, construct_qr, predicted, DEFAULT_BUDGET};
use p2q2::catalog::{build, GroupSpec};

fn main() {
    let spec: GroupSpec = std::env::args().nth(1).unwrap_or_else(|| "t25:p=7,q=3".into()).parse().expect("spec");
    let b = build(&spec).expect("buildable");
    let c = match construct_qr(&b) {
        Ok(c) => c,
        Err(e) => return println!("{spec}: {e}"),
    };
    let (expr, order) = predicted(&spec).unwrap();
    println!("{spec}: |Q| = {}, |R| = {}, |QR| = {}", c.q.order(), c.r.order(), c.qr.order());
    println!("predicted {expr} of order {order}");
    println!("Q normal, Q ∩ R = 1: {}", check_main_theorem(&b.group, &c.q, &c.r, &c.qr));
    match brute_aut(&b.group, DEFAULT_BUDGET) {
        Ok(all) => println!("exhaustive search: {} automorphisms, same set: {}", all.order(), all.same_set(&c.qr)),
        Err(e) => println!("exhaustive search skipped: {e}"),
    }
}
