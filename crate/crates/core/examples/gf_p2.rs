//! Arithmetic in GF(p^2) = GF(p)(√D).
//!
//! cargo run --example gf_p2 -- 5

use p2q2::autom::crosscheck::mn_sums;
use p2q2::gfp2::{primitive_root, subgroup_parameter, GfParams};

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let f = GfParams::canonical(p).expect("odd prime");
    println!("GF({p}^2) with D = {}, {} units", f.d(), f.unit_count());

    let g = primitive_root(f);
    println!("primitive element: {} + {}√D, order {}", g.a(), g.b(), g.order().unwrap());

    for s in [2, 3, p + 1] {
        let x = g.pow(s);
        let (m, n) = mn_sums(f, g, s);
        println!("  g^{s} = {} + {}√D  (binomial sums: {m} + {n}√D)", x.a(), x.b());
    }
    for k in [2, p + 1] {
        if let Ok(u) = subgroup_parameter(f, k) {
            println!("element of order {k}: {} + {}√D", u.a(), u.b());
        }
    }
    let x = f.element(1, 1);
    let y = f.element(2, 3 % p);
    println!("(1+√D)(2+3√D) = {:?}", x.mul(&y).map(|z| (z.a(), z.b())));
}
